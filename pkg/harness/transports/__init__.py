"""# descensus.harness.transports

Byte transports and frame channels joining the station to the device under test.
"""

__all__ =   [
                # Abstract classes.
                "FrameChannel",
                "Link",
                "Transport",

                # Concrete classes.
                "InProcessFrameChannel",
                "InProcessTransport",
                "SerialTransport",
                "TcpFrameChannel",
                "TcpTransport",

                # Registry.
                "attach_transport",
                "load_transport",
                "register_transport"
            ]

# Abstract classes.
from harness.transports.__base__    import FrameChannel, Link, Transport

# Concrete classes.
from harness.transports.inproc      import InProcessFrameChannel, InProcessTransport
from harness.transports.serial      import SerialTransport
from harness.transports.tcp         import TcpFrameChannel, TcpTransport

# Registry.
from harness.transports.registry    import attach_transport, load_transport, register_transport
