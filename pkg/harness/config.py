"""# descensus.harness.config

Trial configuration: one JSON document with a block per component.

```json
{
    "trial":      {"seed": 7, "timeout": 120.0},
    "camera":     {"width": 1280, "height": 720, "f_px": 620.0},
    "control":    {"gains": {"k1": 0.8, "k2": 0.1, "k3": 0.7}},
    "transport":  {"kind": "tcp"}
}
```

Every key is optional; unknown keys are rejected.
"""

__all__ = ["TransportParams", "TrialConfig", "config_from_dict", "config_to_dict", "dump_config", "load_config"]

from dataclasses            import asdict, dataclass, field, fields
from json                   import dumps, JSONDecodeError, loads
from math                   import pi
from pathlib                import Path
from typing                 import Any, Dict, Optional, Tuple, Union

from control                import ControlParams
from harness.exceptions     import ConfigurationError
from simworld               import CameraModel, DynamicsParams, MarkerGeometry, MIN_RENDER_ALTITUDE, RenderParams, SensorModel
from vision                 import VisionParams

@dataclass(frozen = True)
class TransportParams:
    """# Transport Parameters.

    ## Attributes:
        * kind          (str):              "inproc", "tcp" or "serial". Defaults to "inproc".
        * host          (str):              TCP host. Defaults to "127.0.0.1".
        * port          (int):              TCP port of the byte link; 0 picks a free port.
                                            Defaults to 0.
        * frame_host    (str):              Host of the frame channel. Defaults to "127.0.0.1".
        * frame_port    (int):              TCP port of the frame channel; 0 picks a free port.
                                            Defaults to 0.
        * device        (Optional[str]):    Serial device path. Defaults to None.
        * baud          (int):              Serial baud rate. Defaults to 115200.
        * chunk_size    (int):              In-process delivery chunk size [bytes]; 0 delivers every
                                            write whole. Defaults to 0.
        * timeout       (float):            Seconds to wait for the peer before failing. Defaults
                                            to 10.
    """
    kind:       str =           "inproc"
    host:       str =           "127.0.0.1"
    port:       int =           0
    frame_host: str =           "127.0.0.1"
    frame_port: int =           0
    device:     Optional[str] = None
    baud:       int =           115200
    chunk_size: int =           0
    timeout:    float =         10.0

    def __post_init__(self) -> None:
        """# Verify Parameters."""
        assert self.kind in ("inproc", "tcp", "serial"),    f"Unknown transport kind {self.kind!r}"
        assert 0 <= self.port <= 65535,                     f"Invalid port {self.port}"
        assert 0 <= self.frame_port <= 65535,               f"Invalid frame port {self.frame_port}"
        assert self.baud > 0,                               f"Invalid baud rate {self.baud}"
        assert self.chunk_size >= 0,                        f"Chunk size must be non-negative, got {self.chunk_size}"
        assert self.timeout > 0,                            f"Timeout must be positive, got {self.timeout}"

@dataclass(frozen = True)
class TrialConfig:
    """# Trial Configuration.

    ## Attributes:
        * seed                  (int):                  Random seed of the trial (master seed of a
                                                        campaign). Defaults to 0.
        * start_altitude_range  (Tuple[float, float]):  Start altitude range [m]. Defaults to
                                                        (5, 10).
        * yaw_range             (Tuple[float, float]):  Start yaw range [rad]. Defaults to the full
                                                        circle.
        * control_period        (float):                Control (and frame) period [s]. Defaults to
                                                        0.05.
        * timeout               (float):                Simulated time limit [s]. Defaults to 120.
        * loss_frames           (int):                  Consecutive frames without the marker in
                                                        view tolerated before failing. Defaults to
                                                        40.
        * view_margin           (float):                Fraction of the field of view kept clear
                                                        around the marker at the start. Defaults to
                                                        0.1.
        * camera, marker, sensor, dynamics, render, vision, control, transport:
                                                        Component parameter blocks.
    """
    seed:                   int =                   0
    start_altitude_range:   Tuple[float, float] =   (5.0, 10.0)
    yaw_range:              Tuple[float, float] =   (-pi, pi)
    control_period:         float =                 0.05
    timeout:                float =                 120.0
    loss_frames:            int =                   40
    view_margin:            float =                 0.1
    camera:                 CameraModel =           field(default_factory = CameraModel)
    marker:                 MarkerGeometry =        field(default_factory = MarkerGeometry)
    sensor:                 SensorModel =           field(default_factory = SensorModel)
    dynamics:               DynamicsParams =        field(default_factory = DynamicsParams)
    render:                 RenderParams =          field(default_factory = RenderParams)
    vision:                 VisionParams =          field(default_factory = VisionParams)
    control:                ControlParams =         field(default_factory = ControlParams)
    transport:              TransportParams =       field(default_factory = TransportParams)

    def __post_init__(self) -> None:
        """# Verify Configuration."""
        # Lists arrive from JSON.
        object.__setattr__(self, "start_altitude_range", tuple(self.start_altitude_range))
        object.__setattr__(self, "yaw_range",            tuple(self.yaw_range))

        low, high = self.start_altitude_range
        assert MIN_RENDER_ALTITUDE < low <= high < 100,     f"Invalid start altitude range {self.start_altitude_range}"
        assert self.yaw_range[0] <= self.yaw_range[1],      f"Invalid yaw range {self.yaw_range}"
        assert self.control_period > 0,                     f"Control period must be positive, got {self.control_period}"
        assert self.timeout >= self.control_period,        f"Timeout shorter than one period: {self.timeout}"
        assert self.loss_frames >= 0,                       f"Loss frames must be non-negative, got {self.loss_frames}"
        assert 0 <= self.view_margin < 1,                   f"View margin must lie in [0, 1), got {self.view_margin}"

    @property
    def frame_rate(self) -> float:
        """# Frame Rate [Hz]; frames are rendered once per control period."""
        return 1.0 / self.control_period

# Configuration blocks and the types they build.
BLOCKS:     Dict[str, type] =   {
                                    "camera":       CameraModel,
                                    "marker":       MarkerGeometry,
                                    "sensor":       SensorModel,
                                    "dynamics":     DynamicsParams,
                                    "render":       RenderParams,
                                    "vision":       VisionParams,
                                    "control":      ControlParams,
                                    "transport":    TransportParams
                                }

# Scalar trial settings, read from the "trial" block.
TRIAL_KEYS: Tuple[str, ...] =   tuple(f.name for f in fields(TrialConfig) if f.name not in BLOCKS)

def _check_keys_(
    block:      str,
    values:     Any,
    allowed:    Tuple[str, ...]
) -> Dict[str, Any]:
    """# Verify a block is a mapping of known keys."""
    if not isinstance(values, dict):    raise ConfigurationError(f"Block {block!r} must be a mapping, got {type(values).__name__}")

    unknown:    set =   set(values) - set(allowed)
    if unknown:                         raise ConfigurationError(f"Unknown keys in block {block!r}: {sorted(unknown)}")

    return values

def config_from_dict(
    document:   Dict[str, Any]
) -> TrialConfig:
    """# Configuration from Document.

    ## Args:
        * document  (Dict[str, Any]):   Parsed configuration document.

    ## Returns:
        * TrialConfig:  Configuration, defaults filled in.

    ## Raises:
        * ConfigurationError:   On unknown blocks or keys and on invalid values.
    """
    _check_keys_("<root>", document, ("trial",) + tuple(BLOCKS))

    try:
        blocks: Dict[str, Any] =    {
                                        name:   kind(**_check_keys_(name, document.get(name, {}), tuple(f.name for f in fields(kind))))
                                        for name, kind in BLOCKS.items()
                                    }
        return TrialConfig(**_check_keys_("trial", document.get("trial", {}), TRIAL_KEYS), **blocks)

    except ConfigurationError:                          raise
    except (AssertionError, TypeError, ValueError) as e: raise ConfigurationError(f"Invalid configuration: {e}") from e

def config_to_dict(
    config: TrialConfig
) -> Dict[str, Any]:
    """# Configuration to Document.

    ## Args:
        * config    (TrialConfig):  Configuration.

    ## Returns:
        * Dict[str, Any]:   JSON-ready document that config_from_dict maps back to config.
    """
    document:   Dict[str, Any] =    {"trial": {key: getattr(config, key) for key in TRIAL_KEYS}}
    document.update({name: asdict(getattr(config, name)) for name in BLOCKS})

    return loads(dumps(document))

def dump_config(
    config: TrialConfig,
    path:   Optional[Union[str, Path]] =    None
) -> str:
    """# Dump Configuration.

    ## Args:
        * config    (TrialConfig):              Configuration.
        * path      (str | Path, optional):     File to write, if any.

    ## Returns:
        * str:  Canonical JSON text (sorted keys, indent 2).
    """
    text:   str =   dumps(config_to_dict(config), indent = 2, sort_keys = True) + "\n"

    if path is not None: Path(path).write_text(text, encoding = "utf-8")

    return text

def load_config(
    path:   Optional[Union[str, Path]] =    None
) -> TrialConfig:
    """# Load Configuration.

    Accepts a configuration document or a run manifest (whose configuration snapshot is used).

    ## Args:
        * path  (str | Path, optional): Configuration file. Defaults to None (all defaults).

    ## Returns:
        * TrialConfig:  Configuration.

    ## Raises:
        * ConfigurationError:   If the file cannot be read, is not valid JSON or holds invalid
                                settings.
    """
    if path is None: return TrialConfig()

    try:                        document:   Any =   loads(Path(path).read_text(encoding = "utf-8"))
    except OSError as e:        raise ConfigurationError(f"Cannot read configuration {path}: {e.strerror or e}") from e
    except JSONDecodeError as e:raise ConfigurationError(f"Configuration {path} is not valid JSON: {e}") from e

    # Run manifests carry the configuration snapshot under "config".
    if isinstance(document, dict) and "tool_version" in document and "config" in document:
        document =  document["config"]

    return config_from_dict(document)
