"""# descensus.simworld.state

Drone kinematic state.
"""

__all__ = ["DroneState", "normalize_angle"]

from dataclasses    import dataclass, replace
from math           import isfinite, pi, remainder
from typing         import Tuple

def normalize_angle(
    angle:  float
) -> float:
    """# Normalize Angle.

    ## Args:
        * angle (float):    Angle in radians.

    ## Returns:
        * float:    Equivalent angle in (-pi, pi].
    """
    wrapped:    float = remainder(angle, 2 * pi)
    return pi if wrapped <= -pi else wrapped

@dataclass(frozen = True)
class DroneState:
    """# Drone State.

    ## Attributes:
        * north             (float):                        World north [m].
        * east              (float):                        World east [m].
        * down              (float):                        World down [m]; altitude is -down.
        * yaw               (float):                        Heading [rad] in (-pi, pi].
        * velocity          (Tuple[float, float, float]):   Realized body-aligned velocity (vx, vy,
                                                            vz) [m/s].
        * yaw_rate          (float):                        Realized yaw rate [rad/s].
        * autoland          (bool):                         Vertical landing procedure engaged.
        * landed            (bool):                         Touchdown latched.
    """
    north:      float =                     0.0
    east:       float =                     0.0
    down:       float =                     -7.0
    yaw:        float =                     0.0
    velocity:   Tuple[float, float, float] = (0.0, 0.0, 0.0)
    yaw_rate:   float =                     0.0
    autoland:   bool =                      False
    landed:     bool =                      False

    def __post_init__(self) -> None:
        """# Verify State."""
        assert self.down <= 0,                          f"Drone below ground (down = {self.down})"
        assert -pi < self.yaw <= pi,                    f"Yaw not normalized: {self.yaw}"
        assert all(map(isfinite, (self.north, self.east, self.down, self.yaw))), "Non-finite state"

    @classmethod
    def at(cls,
        north:      float,
        east:       float,
        altitude:   float,
        yaw:        float = 0.0
    ) -> "DroneState":
        """# Hovering State at Position.

        ## Args:
            * north     (float):            World north [m].
            * east      (float):            World east [m].
            * altitude  (float):            Altitude above ground [m].
            * yaw       (float, optional):  Heading [rad]; normalized. Defaults to 0.

        ## Returns:
            * DroneState:   Hovering state.
        """
        return cls(north = north, east = east, down = -altitude, yaw = normalize_angle(yaw))

    @property
    def altitude(self) -> float:
        """# Altitude [m] above ground."""
        return -self.down

    def evolve(self, **changes) -> "DroneState":
        """# Copy with Changes."""
        return replace(self, **changes)
