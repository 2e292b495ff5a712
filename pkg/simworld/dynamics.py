"""# descensus.simworld.dynamics

First-order kinematic drone model driven by body-frame velocity commands.
"""

__all__ = ["DynamicsParams", "is_touchdown", "step_dynamics"]

from dataclasses        import dataclass
from math               import cos, exp, sin
from typing             import Tuple, TYPE_CHECKING

from simworld.state     import DroneState, normalize_angle

if TYPE_CHECKING: from control.commands import ControlOutput

# Yaw rates below this are integrated as straight-line motion.
_STRAIGHT_RATE_:    float = 1e-12

@dataclass(frozen = True)
class DynamicsParams:
    """# Dynamics Parameters.

    ## Attributes:
        * tau           (float):    Velocity response time constant [s]; 0 is an ideal response.
                                    Defaults to 0.
        * land_speed    (float):    Descent rate of the vertical landing procedure [m/s]. Defaults
                                    to 0.2.
        * touchdown_alt (float):    Altitude at or below which the drone counts as landed [m].
                                    Defaults to 0.01.
    """
    tau:            float = 0.0
    land_speed:     float = 0.2
    touchdown_alt:  float = 0.01

    def __post_init__(self) -> None:
        """# Verify Parameters."""
        assert self.tau >= 0,           f"Time constant must be non-negative, got {self.tau}"
        assert self.land_speed > 0,     f"Landing speed must be positive, got {self.land_speed}"
        assert self.touchdown_alt >= 0, f"Touchdown altitude must be non-negative, got {self.touchdown_alt}"

def _displacement_(
    vx:     float,
    vy:     float,
    yaw:    float,
    rate:   float,
    dt:     float
) -> Tuple[float, float]:
    """# Horizontal Displacement.

    Exact integral of a constant body-frame velocity while the heading turns at a constant rate.

    ## Returns:
        * Tuple[float, float]:  (d_north, d_east) [m].
    """
    if abs(rate) < _STRAIGHT_RATE_:
        return (vx * cos(yaw) - vy * sin(yaw)) * dt, (vx * sin(yaw) + vy * cos(yaw)) * dt

    # Integrals of cos/sin of the heading over the step.
    int_cos:    float = (sin(yaw + rate * dt) - sin(yaw)) / rate
    int_sin:    float = (cos(yaw) - cos(yaw + rate * dt)) / rate

    return vx * int_cos - vy * int_sin, vx * int_sin + vy * int_cos

def step_dynamics(
    state:  DroneState,
    cmd:    "ControlOutput",
    dt:     float,
    params: DynamicsParams =    DynamicsParams()
) -> DroneState:
    """# Step Dynamics.

    Applies a velocity command for dt seconds. The body-frame command is rotated by the (turning)
    heading into world NED; altitude is clamped at the ground, where touchdown latches. A command
    carrying final_land engages the vertical landing procedure, which then descends at land_speed
    with no lateral or yaw motion until touchdown.

    ## Args:
        * state     (DroneState):               Current state.
        * cmd       (ControlOutput):            Velocity command (vx, vy, vz body-aligned, NED
                                                positive down; omega_yaw; final_land).
        * dt        (float):                    Step duration [s].
        * params    (DynamicsParams, optional): Model parameters.

    ## Returns:
        * DroneState:   State after dt.

    ## Raises:
        * ValueError:   If dt is not positive.
    """
    if dt <= 0: raise ValueError(f"Time step must be positive, got {dt}")

    # Nothing moves after touchdown.
    if state.landed: return state

    autoland:   bool =  state.autoland or cmd.final_land

    # Target velocities.
    if autoland:    target, target_rate = (0.0, 0.0, params.land_speed), 0.0
    else:           target, target_rate = (cmd.vx, cmd.vy, cmd.vz), cmd.omega_yaw

    # First-order lag towards the target.
    if params.tau > 0:
        keep:       float = exp(-dt / params.tau)
        velocity:   tuple = tuple(t + (v - t) * keep for v, t in zip(state.velocity, target))
        rate:       float = target_rate + (state.yaw_rate - target_rate) * keep
    else:
        velocity, rate =    tuple(float(v) for v in target), float(target_rate)

    d_north, d_east =       _displacement_(velocity[0], velocity[1], state.yaw, rate, dt)
    down:       float =     state.down + velocity[2] * dt
    landed:     bool =      down >= 0

    return state.evolve(
        north =     state.north + d_north,
        east =      state.east + d_east,
        down =      0.0 if landed else down,
        yaw =       normalize_angle(state.yaw + rate * dt),
        velocity =  (0.0, 0.0, 0.0) if landed else velocity,
        yaw_rate =  0.0 if landed else rate,
        autoland =  autoland,
        landed =    landed
    )

def is_touchdown(
    state:      DroneState,
    threshold:  float =         0.01
) -> bool:
    """# Touchdown?

    ## Args:
        * state     (DroneState):       Drone state.
        * threshold (float, optional):  Touchdown altitude [m]. Defaults to 0.01.

    ## Returns:
        * bool: True when the drone is on (or within threshold of) the ground.
    """
    return state.landed or state.altitude <= threshold
