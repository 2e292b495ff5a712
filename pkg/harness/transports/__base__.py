"""# descensus.harness.transports.base

Abstract links between the station and the device under test: a full-duplex byte stream carrying
protocol messages, and a one-way frame channel standing in for the video path.
"""

__all__ = ["FrameChannel", "Link", "Transport"]

from abc            import ABC, abstractmethod
from dataclasses    import dataclass
from typing         import Optional

from vision.frames  import GrayFrame

class Transport(ABC):
    """# Abstract Transport Endpoint.

    One end of a byte stream. Delivery is byte-exact and ordered per direction; chunk boundaries
    are not preserved.

    ## Methods:
        * send(data: bytes) -> None:                    Write bytes to the peer.
        * receive(timeout: float) -> bytes:             Read whatever the peer has sent.
        * close() -> None:                              Close this end.
    """

    @abstractmethod
    def send(self,
        data:   bytes
    ) -> None:
        """# Send.

        ## Args:
            * data  (bytes):    Bytes to write.

        ## Raises:
            * TransportError:   If the link fails.
        """
        pass

    @abstractmethod
    def receive(self,
        timeout:    Optional[float] =   None
    ) -> bytes:
        """# Receive.

        ## Args:
            * timeout   (float, optional):  Seconds to wait for data; None waits indefinitely.

        ## Returns:
            * bytes:    Some received bytes, or b"" if none arrived in time.

        ## Raises:
            * LinkClosed:       If the peer closed the link and nothing is pending.
            * TransportError:   If the link fails.
        """
        pass

    @abstractmethod
    def close(self) -> None:
        """# Close Endpoint."""
        pass

class FrameChannel(ABC):
    """# Abstract Frame Channel Endpoint.

    Carries whole luminance frames, in order.
    """

    @abstractmethod
    def send_frame(self,
        frame:  GrayFrame
    ) -> None:
        """# Send Frame."""
        pass

    @abstractmethod
    def receive_frame(self,
        timeout:    Optional[float] =   None
    ) -> GrayFrame:
        """# Receive Frame.

        ## Args:
            * timeout   (float, optional):  Seconds to wait; None waits indefinitely.

        ## Returns:
            * GrayFrame:    Next frame.

        ## Raises:
            * LinkClosed:       If the peer closed the channel.
            * TransportError:   On timeout or failure.
        """
        pass

    @abstractmethod
    def close(self) -> None:
        """# Close Endpoint."""
        pass

@dataclass
class Link:
    """# Link.

    Station and device ends of the byte transport and of the frame channel. Device ends are absent
    when the device under test is physically attached.

    ## Attributes:
        * station           (Transport):                Station byte endpoint.
        * station_frames    (FrameChannel):             Station frame sender.
        * device            (Optional[Transport]):      Device byte endpoint.
        * device_frames     (Optional[FrameChannel]):   Device frame receiver.
        * threaded          (bool):                     Device side must run in its own thread
                                                        (blocking socket ends).
    """
    station:        Transport
    station_frames: FrameChannel
    device:         Optional[Transport] =       None
    device_frames:  Optional[FrameChannel] =    None
    threaded:       bool =                      False

    @property
    def local_device(self) -> bool:
        """# Device ends provided by this link?"""
        return self.device is not None and self.device_frames is not None

    def close(self) -> None:
        """# Close every endpoint."""
        for endpoint in (self.station, self.station_frames, self.device, self.device_frames):
            if endpoint is not None: endpoint.close()
