"""Exception hierarchy shared by all jtk modules."""


class JTKError(Exception):
    """Base class for every error raised by jtk."""


class NotDivisibleError(JTKError):
    pass


class PoleError(JTKError):
    """A series division would need negative powers."""


class NormalizationError(JTKError):
    pass


class NotNilpotentError(JTKError):
    pass


class ShapeError(JTKError):
    pass


class OrderError(JTKError):
    """A truncated series is too short for the requested evaluation."""


class UnknownNameError(JTKError, KeyError):
    def __str__(self):
        return str(self.args[0]) if self.args else ""


class ParseError(JTKError):
    def __init__(self, message, position):
        super().__init__(f"{message} at position {position}")
        self.position = position


class DialectError(ParseError):
    pass


class ConsistencyError(JTKError):
    """Two independent routes to the same object disagreed."""


class ConfigError(JTKError):
    """Bad suite or command-line configuration."""
