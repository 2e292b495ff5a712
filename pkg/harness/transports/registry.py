"""# descensus.harness.transports.registry

Dynamic transport registration and loading.
"""

__all__ = ["attach_transport", "load_transport", "register_transport"]

from dataclasses                    import asdict
from typing                         import Callable, Dict, Optional

from harness.config                 import TransportParams
from harness.exceptions             import ConfigurationError
from harness.transports.__base__    import Link
from harness.transports.inproc      import open_inproc_link
from harness.transports.serial      import open_serial_link
from harness.transports.tcp         import open_tcp_link

# Initialize registry.
_REGISTRY_: Dict[str, Callable[..., Link]] =    {}

def register_transport(
    name:       str,
    opener:     Callable[..., Link]
) -> None:
    """# Register Transport.

    ## Args:
        * name      (str):                  Unique name of transport.
        * opener    (Callable[..., Link]):  Function opening a link from transport parameters.
    """
    _REGISTRY_[name.lower()] = opener

def load_transport(
    name:   str,
    **kwargs
) -> Link:
    """# Load Transport.

    ## Args:
        * name  (str):  Transport selection.

    ## Returns:
        * Link: Opened link.

    ## Raises:
        * ConfigurationError:   If transport is not registered.
    """
    # If transport is not registered...
    if name.lower() not in _REGISTRY_:

        # Report error.
        raise ConfigurationError(f"Invalid transport selection: {name}")

    # Otherwise, open link.
    return _REGISTRY_[name.lower()](**kwargs)

def attach_transport(
    kind:   Optional[str] =                 None,
    params: Optional[TransportParams] =     None
) -> Link:
    """# Attach Transport.

    ## Args:
        * kind      (str, optional):                "inproc", "tcp" or "serial". Defaults to
                                                    params.kind.
        * params    (TransportParams, optional):    Addresses, device path and timeouts.

    ## Returns:
        * Link: In-process and TCP links provide both ends; serial links only the station end.

    ## Raises:
        * TransportError:   If the link cannot be opened (the OS cause is chained).
    """
    params: TransportParams =   params or TransportParams()

    return load_transport(kind or params.kind, **asdict(params))

# Register built-in transports.
register_transport("inproc", open_inproc_link)
register_transport("tcp",    open_tcp_link)
register_transport("serial", open_serial_link)
