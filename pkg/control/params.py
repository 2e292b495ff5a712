"""# descensus.control.params

Controller gains and landing-procedure parameters.
"""

__all__ = ["ControlParams", "Gains"]

from dataclasses    import dataclass, field
from logging        import Logger
from math           import isfinite
from typing         import Any, Dict, Union

from utilities      import get_child

LOGGER: Logger =    get_child("control")

@dataclass(frozen = True)
class Gains:
    """# Proportional Gains.

    ## Attributes:
        * k1    (float):    Lateral gain, (m/s) per meter of position error. Defaults to 0.8.
        * k2    (float):    Vertical gain, (m/s) per meter of altitude. Defaults to 0.1.
        * k3    (float):    Yaw gain, (rad/s) per radian of heading error. Defaults to 0.7.

    Two documented deviations: k2 defaults to 0.1 rather than 0.3, which keeps landings from 10 m
    inside the 26-60 s envelope, and non-positive gains are accepted with a warning instead of being
    rejected.
    """
    k1: float = 0.8
    k2: float = 0.1
    k3: float = 0.7

    def __post_init__(self) -> None:
        """# Verify Gains.

        Gains must be finite. Zero or negative gains are accepted for experiments (a stalled or
        diverging loop) and reported with a warning.
        """
        assert all(map(isfinite, (self.k1, self.k2, self.k3))), f"Non-finite gains {self}"

        if min(self.k1, self.k2, self.k3) <= 0: LOGGER.warning(f"Non-positive controller gains: {self}")

@dataclass(frozen = True)
class ControlParams:
    """# Control Parameters.

    ## Attributes:
        * gains                         (Gains):    Proportional gains.
        * align_pos_tol                 (float):    Lateral alignment tolerance [m]. Defaults to 0.25.
        * align_yaw_tol                 (float):    Heading alignment tolerance [rad]. Defaults to
                                                    0.15.
        * h_land                        (float):    Height at which the vertical landing command is
                                                    issued [m]. Defaults to 0.5.
        * vz_descend_is_positive_down   (bool):     NED sign convention of the descent command.
                                                    Defaults to True.
        * max_lateral                   (float):    Lateral speed limit [m/s]. Defaults to 3.
        * max_vertical                  (float):    Vertical speed limit [m/s]. Defaults to 2.
        * max_yaw_rate                  (float):    Yaw rate limit [rad/s]. Defaults to 1.5.
        * touchdown_alt                 (float):    Altitude reading taken as touchdown [m]. Defaults
                                                    to 0.01.
        * altitude_window               (int):      Moving-average window over altitude readings;
                                                    1 disables filtering. Defaults to 1.
    """
    gains:                          Gains = field(default_factory = Gains)
    align_pos_tol:                  float = 0.25
    align_yaw_tol:                  float = 0.15
    h_land:                         float = 0.5
    vz_descend_is_positive_down:    bool =  True
    max_lateral:                    float = 3.0
    max_vertical:                   float = 2.0
    max_yaw_rate:                   float = 1.5
    touchdown_alt:                  float = 0.01
    altitude_window:                int =   1

    def __post_init__(self) -> None:
        """# Verify Parameters."""
        # Gains arrive as a mapping from JSON configuration.
        gains:  Union[Gains, Dict[str, Any]] =  self.gains
        if isinstance(gains, dict): object.__setattr__(self, "gains", Gains(**gains))

        assert self.align_pos_tol > 0,                                  "Alignment position tolerance must be positive"
        assert self.align_yaw_tol > 0,                                  "Alignment yaw tolerance must be positive"
        assert self.h_land > 0,                                         "Landing height must be positive"
        assert min(self.max_lateral, self.max_vertical, self.max_yaw_rate) > 0, \
                                                                        "Saturation limits must be positive"
        assert 0 <= self.touchdown_alt < self.h_land,                   "Touchdown altitude must lie in [0, h_land)"
        assert self.altitude_window >= 1,                               "Altitude window must be at least 1"
