"""# descensus.protocol.downlink

Codec of the newline-terminated downlink messages `v:x,y,z`, `w:x` and `l:1`, and the framer that
splits the downlink byte stream into lines.
"""

__all__ = ["LineFramer", "encode_downlink", "parse_downlink"]

from math                   import isfinite
from re                     import Pattern, compile as regex
from typing                 import List, Union

from protocol.exceptions    import MalformedMessage
from protocol.messages      import DownlinkMessage, Land, Velocity, YawRate

NEWLINE:    bytes =     b"\n"

# `c:payload\n` with nothing after the newline.
LINE:       Pattern =   regex(rb"([vwl]):([^\n]*)\n")
NUMBER:     Pattern =   regex(rb"[+-]?(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?")

def _format_(value: float) -> bytes:
    """# Fixed 3-decimal value, negative zero printed as zero."""
    if not isfinite(value): raise ValueError(f"Cannot encode non-finite value {value}")

    text:   bytes = b"%.3f" % value
    return b"0.000" if text == b"-0.000" else text

def encode_downlink(
    message:    DownlinkMessage
) -> bytes:
    """# Encode Downlink Message.

    ## Args:
        * message   (DownlinkMessage):  Message to encode.

    ## Returns:
        * bytes:    ASCII line terminated by a single newline.

    ## Raises:
        * ValueError:   If a value is non-finite.
    """
    match message:
        case Velocity(vx = vx, vy = vy, vz = vz):   return b"v:" + b",".join(map(_format_, (vx, vy, vz))) + NEWLINE
        case YawRate(omega = omega):                return b"w:" + _format_(omega) + NEWLINE
        case Land():                                return b"l:1" + NEWLINE
        case _:                                     raise TypeError(f"Not a downlink message: {message!r}")

def _numbers_(line: bytes, payload: bytes, count: int) -> List[float]:
    """# Parse exactly `count` comma-separated numbers."""
    fields: List[bytes] =   payload.split(b",")

    if len(fields) != count:                                raise MalformedMessage(line, f"expected {count} fields, got {len(fields)}")
    if not all(NUMBER.fullmatch(field) for field in fields): raise MalformedMessage(line, "unparseable number")

    values: List[float] =   [float(field) for field in fields]
    if not all(map(isfinite, values)):                      raise MalformedMessage(line, "non-finite number")

    return values

def parse_downlink(
    line:   Union[bytes, str]
) -> DownlinkMessage:
    """# Parse Downlink Message.

    Any decimal precision is accepted on input.

    ## Args:
        * line  (bytes | str):  One newline-terminated line.

    ## Returns:
        * DownlinkMessage:  Decoded message.

    ## Raises:
        * MalformedMessage: On unknown type, wrong field count, unparseable number or missing
                            newline.
    """
    line:   bytes = line.encode("ascii", errors = "replace") if isinstance(line, str) else bytes(line)

    if not line.endswith(NEWLINE):  raise MalformedMessage(line, "missing newline")

    found =     LINE.fullmatch(line)
    if found is None:               raise MalformedMessage(line, "unknown type or layout")

    kind, payload =     found.groups()

    match kind:
        case b"v":  return Velocity(*_numbers_(line, payload, 3))
        case b"w":  return YawRate(*_numbers_(line, payload, 1))
        case _:
            if payload != b"1":     raise MalformedMessage(line, "land payload must be 1")
            return Land()

class LineFramer():
    """# Line Framer.

    Splits a downlink byte stream into complete lines; an incomplete tail waits for the next chunk.
    """

    def __init__(self):
        """# Instantiate Line Framer."""
        self._pending_: bytes = b""

    @property
    def pending(self) -> bytes:
        """# Incomplete Tail."""
        return self._pending_

    def feed(self,
        chunk:  bytes
    ) -> List[bytes]:
        """# Feed Chunk.

        ## Args:
            * chunk (bytes):    Newly received bytes.

        ## Returns:
            * List[bytes]:  Complete lines, each including its newline.
        """
        *lines, self._pending_ =    (self._pending_ + bytes(chunk)).split(NEWLINE)
        return [line + NEWLINE for line in lines]
