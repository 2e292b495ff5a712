"""# descensus.harness.exceptions"""

__all__ = ["ConfigurationError", "LinkClosed", "TransportError"]

class ConfigurationError(ValueError):
    """# Configuration Error.

    Raised for unreadable configuration documents, unknown keys and invalid parameter values.
    """

class TransportError(RuntimeError):
    """# Transport Error.

    Raised when a link cannot be opened or fails while in use; the OS-level cause is chained.
    """

class LinkClosed(TransportError):
    """# Link Closed.

    Raised on reading from a link whose peer has closed it and nothing remains to be read.
    """
