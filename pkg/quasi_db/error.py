"""Quasi DB - Error Classes"""


# Classes
# =======
class QDBError(Exception):
    """Base class for a quasi DB error."""
    def __init__(self, msg):
        """Setup this error."""
        super().__init__(msg)
        self._msg = msg

    def __str__(self):
        """Return the error message."""
        return self._msg


class InvalidParamsError(QDBError):
    """Invalid parameters error."""
    pass


class GraphFormatError(QDBError):
    """Malformed graph6 or edge-list input."""
    def __init__(self, msg, line=None):
        """Setup this error."""
        if line is not None:
            msg = f"line {line}: {msg}"

        super().__init__(msg)
        self.line = line


class DisconnectedGraphError(QDBError):
    """A distance-based operation was given a disconnected graph."""
    def __init__(self, msg, witness=None):
        """Setup this error."""
        super().__init__(msg)
        self.witness = witness


class EnvelopeError(QDBError):
    """The input is larger than the supported envelope."""
    pass
