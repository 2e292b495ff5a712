"""# descensus.protocol.exceptions"""

__all__ = ["MalformedMessage"]

class MalformedMessage(ValueError):
    """# Malformed Message.

    Raised when bytes read from the link do not form a valid protocol message.
    """

    def __init__(self,
        data:   bytes,
        reason: str
    ):
        """# Instantiate Malformed Message.

        ## Args:
            * data      (bytes):    Offending bytes.
            * reason    (str):      What is wrong with them.
        """
        super(MalformedMessage, self).__init__(f"Malformed message {data!r}: {reason}")

        self.data:      bytes = data
        self.reason:    str =   reason
