"""# descensus.protocol.scanner

Input-buffer scanning on the device side: extracts complete uplink messages from an arbitrarily
chunked byte stream and resynchronizes after garbage one byte at a time.
"""

__all__ = ["ScanResult", "UplinkScanner", "scan_buffer"]

from dataclasses            import dataclass, field
from logging                import Logger
from typing                 import Dict, List

from protocol.exceptions    import MalformedMessage
from protocol.messages      import UplinkMessage
from protocol.uplink        import MESSAGE_LENGTH, parse_uplink
from utilities              import get_child

LOGGER: Logger =    get_child("protocol")

@dataclass(frozen = True)
class ScanResult:
    """# Scan Result.

    ## Attributes:
        * messages  (List[UplinkMessage]):  Complete messages, in stream order.
        * remainder (bytes):                Unconsumed suffix; a possible start of a message.
        * garbage   (int):                  Bytes skipped during resynchronization.
    """
    messages:   List[UplinkMessage] =   field(default_factory = list)
    remainder:  bytes =                 b""
    garbage:    int =                   0

def _could_start_message_(
    tail:   bytes
) -> bool:
    """# Could the (shorter than a message) tail grow into a valid message?"""
    match tail[:1]:
        case b"T":  return tail[1:].isdigit() or len(tail) == 1
        case b"A":  return len(tail) == 1 or (tail[1:2] in (b"m", b"c") and (len(tail) == 2 or tail[2:].isdigit()))
        case _:     return False

def scan_buffer(
    buffer: bytes
) -> ScanResult:
    """# Scan Buffer.

    ## Args:
        * buffer    (bytes):    Received bytes.

    ## Returns:
        * ScanResult:   Messages found, the trailing partial message and the garbage tally.
    """
    buffer:     bytes =                 bytes(buffer)
    messages:   List[UplinkMessage] =   []
    position:   int =                   0
    garbage:    int =                   0

    while position + MESSAGE_LENGTH <= len(buffer):
        try:
            messages.append(parse_uplink(buffer[position:position + MESSAGE_LENGTH]))
            position += MESSAGE_LENGTH

        except MalformedMessage:
            position += 1
            garbage +=  1

    # Drop leading tail bytes that no future input can complete.
    while position < len(buffer) and not _could_start_message_(buffer[position:]):
        position += 1
        garbage +=  1

    return ScanResult(messages = messages, remainder = buffer[position:], garbage = garbage)

class UplinkScanner():
    """# Uplink Scanner.

    Stateful scanner fed with byte chunks as they arrive; keeps the remainder between chunks.
    """

    def __init__(self):
        """# Instantiate Uplink Scanner."""
        self._remainder_:   bytes = b""
        self._messages_:    int =   0
        self._garbage_:     int =   0

    @property
    def diagnostics(self) -> Dict[str, int]:
        """# Diagnostics Tally."""
        return {"messages": self._messages_, "garbage_bytes": self._garbage_}

    @property
    def remainder(self) -> bytes:
        """# Pending Partial Message."""
        return self._remainder_

    def feed(self,
        chunk:  bytes
    ) -> List[UplinkMessage]:
        """# Feed Chunk.

        ## Args:
            * chunk (bytes):    Newly received bytes.

        ## Returns:
            * List[UplinkMessage]:  Messages completed by this chunk.
        """
        result:     ScanResult =    scan_buffer(self._remainder_ + bytes(chunk))

        self._remainder_ =  result.remainder
        self._messages_ +=  len(result.messages)
        self._garbage_ +=   result.garbage

        if result.garbage: LOGGER.debug(f"Skipped {result.garbage} garbage bytes")

        return result.messages
