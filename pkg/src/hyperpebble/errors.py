"""Exception hierarchy shared by every module."""


class HypergraphError(ValueError):
    """Base class for all errors raised by hyperpebble."""


class ParseError(HypergraphError):
    def __init__(self, lineno, message):
        self.lineno = lineno
        super().__init__(f"line {lineno}: {message}")


class CapExceeded(HypergraphError):
    """A brute-force routine was asked to enumerate beyond its configured cap."""


class IllegalMove(HypergraphError):
    """A pebble game move whose precondition does not hold."""


class NotSparse(HypergraphError):
    def __init__(self, message, rejected=()):
        self.rejected = list(rejected)
        super().__init__(message)


class NotTight(HypergraphError):
    def __init__(self, message, verdict=None):
        self.verdict = verdict
        super().__init__(message)
