"""# descensus.harness.transports.inproc

In-process links: bounded-latency queues guarded by a condition variable.
"""

__all__ = ["InProcessFrameChannel", "InProcessTransport", "open_inproc_link"]

from collections                    import deque
from threading                      import Condition
from typing                         import Any, Deque, Optional

from harness.exceptions             import LinkClosed, TransportError
from harness.transports.__base__    import FrameChannel, Link, Transport
from vision.frames                  import GrayFrame

class _Queue_():
    """# One-directional queue of items (byte chunks or frames)."""

    def __init__(self):
        self._items_:   Deque[Any] =    deque()
        self._ready_:   Condition =     Condition()
        self._closed_:  bool =          False

    def put(self, item: Any) -> None:
        with self._ready_:
            if self._closed_: raise LinkClosed("In-process link closed")
            self._items_.append(item)
            self._ready_.notify_all()

    def get(self, timeout: Optional[float]) -> Optional[Any]:
        """# Next item, or None on timeout."""
        with self._ready_:
            self._ready_.wait_for(lambda: self._items_ or self._closed_, timeout = timeout)

            if self._items_:    return self._items_.popleft()
            if self._closed_:   raise LinkClosed("In-process link closed")
            return None

    def close(self) -> None:
        with self._ready_:
            self._closed_ = True
            self._ready_.notify_all()

class InProcessTransport(Transport):
    """# In-Process Transport Endpoint.

    Every receive returns one delivered chunk. With a chunk size set, writes are split into chunks
    of at most that many bytes.
    """

    def __init__(self,
        outgoing:   _Queue_,
        incoming:   _Queue_,
        chunk_size: int =       0
    ):
        """# Instantiate In-Process Transport.

        ## Args:
            * outgoing      (_Queue_):          Queue towards the peer.
            * incoming      (_Queue_):          Queue from the peer.
            * chunk_size    (int, optional):    Delivery chunk size; 0 keeps writes whole.
        """
        self._outgoing_:    _Queue_ =   outgoing
        self._incoming_:    _Queue_ =   incoming
        self._chunk_size_:  int =       chunk_size

    def send(self, data: bytes) -> None:
        """# Send."""
        step:   int =   self._chunk_size_ or max(1, len(data))

        for start in range(0, len(data), step): self._outgoing_.put(bytes(data[start:start + step]))

    def receive(self, timeout: Optional[float] = None) -> bytes:
        """# Receive."""
        return self._incoming_.get(timeout) or b""

    def close(self) -> None:
        """# Close both directions."""
        self._outgoing_.close()
        self._incoming_.close()

class InProcessFrameChannel(FrameChannel):
    """# In-Process Frame Channel Endpoint; frames are handed over directly."""

    def __init__(self,
        queue:  _Queue_
    ):
        self._queue_:   _Queue_ =   queue

    def send_frame(self, frame: GrayFrame) -> None:
        """# Send Frame."""
        self._queue_.put(frame)

    def receive_frame(self, timeout: Optional[float] = None) -> GrayFrame:
        """# Receive Frame."""
        frame:  Optional[GrayFrame] =   self._queue_.get(timeout)

        if frame is None: raise TransportError(f"No frame received within {timeout} s")

        return frame

    def close(self) -> None:
        """# Close Channel."""
        self._queue_.close()

def open_inproc_link(
    chunk_size: int =   0,
    **kwargs
) -> Link:
    """# Open In-Process Link.

    ## Args:
        * chunk_size    (int, optional):    Delivery chunk size of the byte transport. Defaults to 0.

    ## Returns:
        * Link: Both ends of both channels; the device side is co-scheduled by the station.
    """
    uplink, downlink, frames =  _Queue_(), _Queue_(), _Queue_()

    return Link(
        station =           InProcessTransport(uplink, downlink, chunk_size),
        station_frames =    InProcessFrameChannel(frames),
        device =            InProcessTransport(downlink, uplink, chunk_size),
        device_frames =     InProcessFrameChannel(frames),
        threaded =          False
    )
