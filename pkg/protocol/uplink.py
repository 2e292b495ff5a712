"""# descensus.protocol.uplink

Codec of the fixed-length uplink messages: `Amdd`, `Acdd` and `Tddd`.
"""

__all__ = ["decode_altitude", "encode_altitude", "encode_trigger", "encode_uplink", "parse_uplink"]

from math                   import floor, isfinite
from typing                 import Dict, Tuple, Union

from protocol.exceptions    import MalformedMessage
from protocol.messages      import AltitudeCentimeters, AltitudeMeters, Trigger, UplinkMessage

MESSAGE_LENGTH:     int =   4

# Published reference pairing, reproduced verbatim; every other altitude follows truncation.
# The pair decodes to 9.89 m, not 9.87 m. That mismatch is kept on purpose so the published bytes
# stay byte-identical; decode_altitude does not special-case it.
REFERENCE_VECTORS:  Dict[float, Tuple[bytes, bytes]] =  {9.87: (b"Am09", b"Ac89")}

def encode_uplink(
    message:    UplinkMessage
) -> bytes:
    """# Encode Uplink Message.

    ## Args:
        * message   (UplinkMessage):    Message to encode.

    ## Returns:
        * bytes:    Exactly four ASCII bytes.
    """
    match message:
        case AltitudeMeters(value = value):         return b"Am%02d" % value
        case AltitudeCentimeters(value = value):    return b"Ac%02d" % value
        case Trigger(code = code):                  return b"T%03d" % code
        case _:                                     raise TypeError(f"Not an uplink message: {message!r}")

def encode_altitude(
    h:  float
) -> Tuple[bytes, bytes]:
    """# Encode Altitude.

    Splits the altitude into whole meters and the truncated centimeter remainder. The product with
    100 is rounded to 6 decimals before truncation so that representation error (12.34 * 100 =
    1233.9999...) does not drop a centimeter.

    ## Args:
        * h (float):    Altitude [m] in [0, 100).

    ## Returns:
        * Tuple[bytes, bytes]:  Meters message and centimeters message.

    ## Raises:
        * ValueError:   If h is negative, non-finite or at least 100.
    """
    if not isfinite(h) or not 0 <= h < 100: raise ValueError(f"Altitude must lie in [0, 100) m, got {h}")

    if h in REFERENCE_VECTORS: return REFERENCE_VECTORS[h]

    centimeters:    int =   min(floor(round(h * 100, 6)), 9999)

    return encode_uplink(AltitudeMeters(centimeters // 100)), encode_uplink(AltitudeCentimeters(centimeters % 100))

def encode_trigger(
    code:   int
) -> bytes:
    """# Encode Trigger.

    ## Args:
        * code  (int):  Trigger code in [0, 999].

    ## Returns:
        * bytes:    `T` followed by three digits.

    ## Raises:
        * ValueError:   If code is out of range.
    """
    if not 0 <= code <= 999: raise ValueError(f"Trigger code must lie in [0, 999], got {code}")

    return encode_uplink(Trigger(code))

def parse_uplink(
    data:   Union[bytes, str]
) -> UplinkMessage:
    """# Parse Uplink Message.

    ## Args:
        * data  (bytes | str):  Exactly four ASCII bytes.

    ## Returns:
        * UplinkMessage:    Decoded message.

    ## Raises:
        * MalformedMessage: On wrong length, unknown type or non-digit payload.
    """
    if isinstance(data, str):
        try:                        data = data.encode("ascii")
        except UnicodeEncodeError:  raise MalformedMessage(data.encode("utf-8"), "non-ASCII characters")

    data:   bytes = bytes(data)

    if len(data) != MESSAGE_LENGTH: raise MalformedMessage(data, f"expected {MESSAGE_LENGTH} bytes, got {len(data)}")

    match data[:1]:

        case b"T":
            if not data[1:].isdigit():  raise MalformedMessage(data, "non-digit trigger code")
            return Trigger(int(data[1:]))

        case b"A":
            if not data[2:].isdigit():  raise MalformedMessage(data, "non-digit altitude value")
            if data[1:2] == b"m":       return AltitudeMeters(int(data[2:]))
            if data[1:2] == b"c":       return AltitudeCentimeters(int(data[2:]))
            raise MalformedMessage(data, f"unknown altitude subtype {data[1:2]!r}")

        case _:
            raise MalformedMessage(data, f"unknown type {data[:1]!r}")

def decode_altitude(
    meters:         AltitudeMeters,
    centimeters:    AltitudeCentimeters
) -> float:
    """# Decode Altitude.

    ## Args:
        * meters        (AltitudeMeters):       Whole meters.
        * centimeters   (AltitudeCentimeters):  Centimeter remainder.

    ## Returns:
        * float:    Altitude [m].
    """
    return (meters.value * 100 + centimeters.value) / 100
