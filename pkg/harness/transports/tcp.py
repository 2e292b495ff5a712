"""# descensus.harness.transports.tcp

TCP links. The byte transport carries protocol messages unchanged; the frame channel prefixes every
frame with an 8-byte big-endian header (width, height) followed by width x height luminance bytes.
"""

__all__ = ["TcpFrameChannel", "TcpTransport", "connect", "open_tcp_link", "socket_pair"]

from socket                         import create_connection, create_server, IPPROTO_TCP, SHUT_RDWR, socket, TCP_NODELAY
from struct                         import calcsize, pack, unpack
from typing                         import Optional, Tuple

from numpy                          import frombuffer, uint8

from harness.exceptions             import LinkClosed, TransportError
from harness.transports.__base__    import FrameChannel, Link, Transport
from vision.frames                  import GrayFrame

# Frame header: width, height.
HEADER:         str =   ">II"
HEADER_SIZE:    int =   calcsize(HEADER)
RECEIVE_SIZE:   int =   65536

def _prepare_(sock: socket) -> socket:
    sock.setsockopt(IPPROTO_TCP, TCP_NODELAY, 1)
    return sock

def socket_pair(
    host:       str =   "127.0.0.1",
    port:       int =   0,
    timeout:    float = 10.0
) -> Tuple[socket, socket]:
    """# Connected Socket Pair.

    Listens on (host, port), connects to it and accepts the connection.

    ## Args:
        * host      (str, optional):    Listening host. Defaults to "127.0.0.1".
        * port      (int, optional):    Listening port; 0 picks a free port. Defaults to 0.
        * timeout   (float, optional):  Connection timeout [s]. Defaults to 10.

    ## Returns:
        * Tuple[socket, socket]:    (accepted, connecting) sockets.

    ## Raises:
        * TransportError:   If the pair cannot be established.
    """
    try:
        with create_server((host, port)) as listener:
            listener.settimeout(timeout)
            client:     socket =    create_connection(listener.getsockname()[:2], timeout = timeout)
            server, _ =             listener.accept()

    except OSError as e:    raise TransportError(f"Cannot open TCP link on {host}:{port}: {e}") from e

    return _prepare_(server), _prepare_(client)

def connect(
    host:       str,
    port:       int,
    timeout:    float = 10.0
) -> socket:
    """# Connect to a listening peer.

    ## Raises:
        * TransportError:   If the connection fails.
    """
    try:                    return _prepare_(create_connection((host, port), timeout = timeout))
    except OSError as e:    raise TransportError(f"Cannot connect to {host}:{port}: {e}") from e

def _close_(sock: socket) -> None:
    try:                sock.shutdown(SHUT_RDWR)
    except OSError:     pass
    sock.close()

class TcpTransport(Transport):
    """# TCP Transport Endpoint."""

    def __init__(self,
        sock:   socket
    ):
        """# Instantiate TCP Transport.

        ## Args:
            * sock  (socket):   Connected socket.
        """
        self._socket_:  socket =    sock

    def send(self, data: bytes) -> None:
        """# Send."""
        try:                    self._socket_.sendall(data)
        except OSError as e:    raise TransportError(f"TCP send failed: {e}") from e

    def receive(self, timeout: Optional[float] = None) -> bytes:
        """# Receive."""
        try:
            self._socket_.settimeout(timeout)
            data:   bytes = self._socket_.recv(RECEIVE_SIZE)

        except (TimeoutError, BlockingIOError): return b""
        except OSError as e:    raise TransportError(f"TCP receive failed: {e}") from e

        if not data: raise LinkClosed("TCP peer closed the link")

        return data

    def close(self) -> None:
        """# Close."""
        _close_(self._socket_)

class TcpFrameChannel(FrameChannel):
    """# TCP Frame Channel Endpoint."""

    def __init__(self,
        sock:   socket
    ):
        """# Instantiate TCP Frame Channel.

        ## Args:
            * sock  (socket):   Connected socket.
        """
        self._socket_:  socket =    sock

    def _read_exact_(self, size: int) -> bytes:
        """# Read exactly size bytes."""
        buffer:     bytearray = bytearray(size)
        view:       memoryview= memoryview(buffer)
        received:   int =       0

        while received < size:
            try:                    count:  int =   self._socket_.recv_into(view[received:])
            except TimeoutError as e:
                raise TransportError("Timed out waiting for frame data") from e
            except OSError as e:    raise TransportError(f"Frame receive failed: {e}") from e

            if count == 0: raise LinkClosed("Frame channel closed by peer")
            received += count

        return bytes(buffer)

    def send_frame(self, frame: GrayFrame) -> None:
        """# Send Frame."""
        try:                    self._socket_.sendall(pack(HEADER, frame.width, frame.height) + frame.data.tobytes())
        except OSError as e:    raise TransportError(f"Frame send failed: {e}") from e

    def receive_frame(self, timeout: Optional[float] = None) -> GrayFrame:
        """# Receive Frame."""
        self._socket_.settimeout(timeout)

        width, height = unpack(HEADER, self._read_exact_(HEADER_SIZE))

        return GrayFrame(frombuffer(self._read_exact_(width * height), dtype = uint8).reshape(height, width))

    def close(self) -> None:
        """# Close."""
        _close_(self._socket_)

def open_tcp_link(
    host:       str =   "127.0.0.1",
    port:       int =   0,
    frame_host: str =   "127.0.0.1",
    frame_port: int =   0,
    timeout:    float = 10.0,
    **kwargs
) -> Link:
    """# Open TCP Link.

    One connection carries protocol bytes, a second one carries frames. Both ends of both are local;
    the device side runs in its own thread.

    ## Returns:
        * Link: Station and device ends.

    ## Raises:
        * TransportError:   If either connection cannot be established.
    """
    station_bytes, device_bytes =   socket_pair(host, port, timeout)

    try:                    station_frames, device_frames = socket_pair(frame_host, frame_port, timeout)
    except TransportError:
        _close_(station_bytes)
        _close_(device_bytes)
        raise

    return Link(
        station =           TcpTransport(station_bytes),
        station_frames =    TcpFrameChannel(station_frames),
        device =            TcpTransport(device_bytes),
        device_frames =     TcpFrameChannel(device_frames),
        threaded =          True
    )
