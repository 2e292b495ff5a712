"""# descensus.control.commands

Proportional velocity commands of the landing controller.
"""

__all__ = ["ControlOutput", "blind_descent_command", "compute_command", "hold_command"]

from dataclasses        import dataclass
from math               import isfinite

from numpy              import clip

from control.params     import ControlParams
from control.pose_error import PoseError
from control.stages     import LandingStage

@dataclass(frozen = True)
class ControlOutput:
    """# Control Output.

    ## Attributes:
        * vx            (float):    Velocity along body x [m/s].
        * vy            (float):    Velocity along body y [m/s].
        * vz            (float):    Vertical velocity [m/s], NED (positive down).
        * omega_yaw     (float):    Yaw rate [rad/s].
        * final_land    (bool):     Engage the vertical landing procedure.
    """
    vx:         float = 0.0
    vy:         float = 0.0
    vz:         float = 0.0
    omega_yaw:  float = 0.0
    final_land: bool =  False

    def __post_init__(self) -> None:
        """# Verify Command."""
        assert all(map(isfinite, (self.vx, self.vy, self.vz, self.omega_yaw))), f"Non-finite command {self}"

def _saturate_(value: float, limit: float) -> float:
    return float(clip(value, -limit, limit))

def compute_command(
    err:    PoseError,
    stage:  LandingStage,
    params: ControlParams
) -> ControlOutput:
    """# Compute Command.

    vx = K1 dx, vy = K1 dy, omega = K3 dtheta. The vertical channel is off (vz = 0) while aligning
    and follows vz = K2 h while descending. FINAL only requests the vertical landing procedure.
    Every channel saturates at its configured limit.

    ## Args:
        * err       (PoseError):        Pose error.
        * stage     (LandingStage):     Current stage; must not be DONE.
        * params    (ControlParams):    Control parameters.

    ## Returns:
        * ControlOutput:    Velocity command.

    ## Raises:
        * ValueError:   If called in the DONE stage.
    """
    if stage is LandingStage.DONE:  raise ValueError("No command exists after touchdown")
    if stage is LandingStage.FINAL: return ControlOutput(final_land = True)

    gains =             params.gains
    vz:     float =     0.0

    if stage is LandingStage.DESCEND:
        vz =    _saturate_(gains.k2 * err.h, params.max_vertical) * (1.0 if params.vz_descend_is_positive_down else -1.0)

    return ControlOutput(
        vx =        _saturate_(gains.k1 * err.dx, params.max_lateral),
        vy =        _saturate_(gains.k1 * err.dy, params.max_lateral),
        vz =        vz,
        omega_yaw = _saturate_(gains.k3 * err.dtheta, params.max_yaw_rate)
    )

def hold_command() -> ControlOutput:
    """# Hold Command.

    Hover in place awaiting re-detection.
    """
    return ControlOutput()

def blind_descent_command(
    h:      float,
    params: ControlParams
) -> ControlOutput:
    """# Blind Descent Command.

    Continue the descent on the altitude reading alone, with no lateral or yaw motion, while the
    marker cannot be detected.

    ## Args:
        * h         (float):            Altitude [m].
        * params    (ControlParams):    Control parameters.

    ## Returns:
        * ControlOutput:    Vertical-only command.
    """
    return ControlOutput(
        vz =    _saturate_(params.gains.k2 * h, params.max_vertical) * (1.0 if params.vz_descend_is_positive_down else -1.0)
    )
