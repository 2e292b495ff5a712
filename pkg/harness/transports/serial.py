"""# descensus.harness.transports.serial

Serial link to a physically attached device under test. Protocol bytes travel over the serial
device; frames travel over TCP to the device's frame listener.
"""

__all__ = ["SerialTransport", "open_serial_link"]

from typing                         import Optional

from serial                         import Serial, SerialException

from harness.exceptions             import TransportError
from harness.transports.__base__    import Link, Transport
from harness.transports.tcp         import TcpFrameChannel, connect

class SerialTransport(Transport):
    """# Serial Transport Endpoint."""

    def __init__(self,
        device: str,
        baud:   int =   115200
    ):
        """# Open Serial Device.

        ## Args:
            * device    (str):              Device path (e.g. /dev/ttyUSB0).
            * baud      (int, optional):    Baud rate. Defaults to 115200.

        ## Raises:
            * TransportError:   If the device cannot be opened.
        """
        try:                        self._port_:    Serial =    Serial(port = device, baudrate = baud, timeout = 0)
        except (SerialException, OSError, ValueError) as e:
            raise TransportError(f"Cannot open serial device {device}: {e}") from e

    def send(self, data: bytes) -> None:
        """# Send."""
        try:
            self._port_.write(data)
            self._port_.flush()

        except (SerialException, OSError) as e: raise TransportError(f"Serial write failed: {e}") from e

    def receive(self, timeout: Optional[float] = None) -> bytes:
        """# Receive."""
        try:
            self._port_.timeout =   timeout
            return self._port_.read(max(1, self._port_.in_waiting))

        except (SerialException, OSError) as e: raise TransportError(f"Serial read failed: {e}") from e

    def close(self) -> None:
        """# Close."""
        self._port_.close()

def open_serial_link(
    device:     Optional[str] = None,
    baud:       int =           115200,
    frame_host: str =           "127.0.0.1",
    frame_port: int =           0,
    timeout:    float =         10.0,
    **kwargs
) -> Link:
    """# Open Serial Link.

    ## Returns:
        * Link: Station ends only.

    ## Raises:
        * TransportError:   If no device is configured, the device cannot be opened, or the
                            device's frame listener cannot be reached.
    """
    if device is None:  raise TransportError("Serial transport requires a device path")
    if frame_port == 0: raise TransportError("Serial transport requires the device's frame port")

    station:    SerialTransport =   SerialTransport(device, baud)

    try:                    frames: TcpFrameChannel =   TcpFrameChannel(connect(frame_host, frame_port, timeout))
    except TransportError:
        station.close()
        raise

    return Link(station = station, station_frames = frames)
