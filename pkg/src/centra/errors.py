"""Exception hierarchy shared by every centra module."""


class CentraError(Exception):
    """Base class for all errors raised by centra."""


class MalformedInput(CentraError, ValueError):
    """A table or permutation file could not be parsed."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class MalformedCycle(MalformedInput):
    pass


class OrderMismatch(CentraError, ValueError):
    pass


class ElementOutOfRange(CentraError, IndexError):
    pass


class NotALoop(CentraError, ValueError):
    pass


class InternalInconsistency(CentraError, AssertionError):
    """Two routes that must agree (equivalent identity forms, fast path vs
    brute force) disagreed on some input."""


class OrderCapExceeded(CentraError, ValueError):
    pass


class ClosureOverflow(CentraError):
    pass


class NotSharplyTransitive(CentraError):
    pass


class LawViolation(CentraError):
    pass
