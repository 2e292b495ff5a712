"""# descensus.tests.conftest

Shared fixtures.
"""

from typing         import Callable, Optional

from numpy.random   import default_rng, Generator
from pytest         import fixture

from control        import ControlOutput
from harness        import Link, TransportParams, TrialConfig
from protocol       import encode_downlink, Land, Velocity, YawRate
from simworld       import CameraModel, DroneState, MarkerGeometry, RenderParams, render_camera
from vision         import GrayFrame

# Half-resolution camera with the default field of view; closed-loop tests run on it.
SMALL_CAMERA:   CameraModel =   CameraModel(width = 640, height = 360, f_px = 310.0)

@fixture
def camera() -> CameraModel:
    """# Default 1280 x 720 camera."""
    return CameraModel()

@fixture
def small_camera() -> CameraModel:
    """# 640 x 360 camera, same field of view."""
    return SMALL_CAMERA

@fixture
def marker() -> MarkerGeometry:
    """# Default marker at the origin."""
    return MarkerGeometry()

@fixture
def rng() -> Generator:
    """# Seeded generator."""
    return default_rng(20240611)

@fixture
def quick_config() -> TrialConfig:
    """# Closed-loop configuration on the small camera."""
    return TrialConfig(
        seed =      7,
        camera =    SMALL_CAMERA,
        render =    RenderParams(supersample = 1),
        transport = TransportParams(timeout = 30.0)
    )

@fixture
def hover_config() -> TrialConfig:
    """# Start below the detectable range with a one-second timeout; trials end in a second."""
    return TrialConfig(
        seed =                  3,
        start_altitude_range =  (0.4, 0.4),
        timeout =               1.0,
        camera =                SMALL_CAMERA,
        render =                RenderParams(supersample = 1),
        transport =             TransportParams(timeout = 5.0)
    )

def render_view(
    camera:     CameraModel,
    marker:     MarkerGeometry,
    north:      float =         0.0,
    east:       float =         0.0,
    altitude:   float =         7.0,
    yaw:        float =         0.0
) -> GrayFrame:
    """# Render the camera frame from a hovering pose."""
    return render_camera(DroneState.at(north, east, altitude, yaw), camera, marker)

class ScriptedDevice():
    """# Scripted Device.

    Stands in for the device under test on the device ends of a link: drains the frame and the
    uplink bytes of a period and answers with a fixed command (or raw bytes).
    """

    def __init__(self,
        link:       Link,
        command:    Optional[ControlOutput] =   None,
        raw:        Optional[bytes] =           None,
        silent:     bool =                      False
    ):
        self.link:      Link =                      link
        self.command:   ControlOutput =             command or ControlOutput(final_land = True)
        self.raw:       Optional[bytes] =           raw
        self.silent:    bool =                      silent
        self.received:  bytearray =                 bytearray()
        self.frames:    int =                       0

    def step(self) -> None:
        self.link.device_frames.receive_frame(1.0)
        self.frames += 1

        while chunk := self.link.device.receive(0): self.received += chunk

        if self.silent:             return
        if self.raw is not None:    return self.link.device.send(self.raw)

        if self.command.final_land: return self.link.device.send(encode_downlink(Land()))

        self.link.device.send(
            encode_downlink(Velocity(self.command.vx, self.command.vy, self.command.vz))
            + encode_downlink(YawRate(self.command.omega_yaw))
        )

def scripted(
    link:   Link,
    **kwargs
) -> Callable[[], None]:
    """# Pump serving one scripted device period."""
    return ScriptedDevice(link, **kwargs).step
