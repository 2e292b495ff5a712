"""# descensus.protocol.messages

Message types of the serial link.

Uplink (station -> device): fixed 4-byte ASCII messages carrying the altitude split into whole meters
and centimeters, and trigger codes. Downlink (device -> station): newline-terminated velocity, yaw
rate and land commands.
"""

__all__ = [
    "AltitudeCentimeters",
    "AltitudeMeters",
    "DownlinkMessage",
    "Land",
    "START_CODE",
    "Trigger",
    "UplinkMessage",
    "Velocity",
    "YawRate"
]

from dataclasses    import dataclass
from typing         import Union

# Trigger code that starts the landing procedure.
START_CODE: int =   111

@dataclass(frozen = True)
class AltitudeMeters:
    """# Altitude, whole meters (0-99)."""
    value:  int

    def __post_init__(self) -> None:
        assert 0 <= self.value <= 99, f"Meters out of range: {self.value}"

@dataclass(frozen = True)
class AltitudeCentimeters:
    """# Altitude, centimeters remainder (0-99)."""
    value:  int

    def __post_init__(self) -> None:
        assert 0 <= self.value <= 99, f"Centimeters out of range: {self.value}"

@dataclass(frozen = True)
class Trigger:
    """# Trigger code (000-999)."""
    code:   int

    def __post_init__(self) -> None:
        assert 0 <= self.code <= 999, f"Trigger code out of range: {self.code}"

@dataclass(frozen = True)
class Velocity:
    """# Velocity command (vx, vy, vz) [m/s]."""
    vx: float
    vy: float
    vz: float

@dataclass(frozen = True)
class YawRate:
    """# Yaw-rate command [rad/s]."""
    omega:  float

@dataclass(frozen = True)
class Land:
    """# Vertical landing command."""

UplinkMessage =     Union[AltitudeMeters, AltitudeCentimeters, Trigger]
DownlinkMessage =   Union[Velocity, YawRate, Land]
