"""Exception hierarchy. Every error raised by the package derives from SymbreakError."""


class SymbreakError(Exception):
    pass


class OutOfRange(SymbreakError, ValueError):
    pass


class SelfLoop(SymbreakError, ValueError):
    pass


class Disconnected(SymbreakError, ValueError):
    pass


class LengthMismatch(SymbreakError, ValueError):
    pass


class SizeLimitExceeded(SymbreakError):
    pass


class BudgetExceeded(SymbreakError):
    """No distinguishing labeling exists within the allowed number of labels."""


class UndefinedForK2Component(SymbreakError, ValueError):
    pass


class BadParams(SymbreakError, ValueError):
    pass


class TooSmall(SymbreakError, ValueError):
    pass


class InvalidTree(SymbreakError, ValueError):
    pass


class ParseError(SymbreakError, ValueError):
    pass


class IncompleteLabeling(SymbreakError, ValueError):
    pass


class PreconditionFailed(SymbreakError):
    pass


class NotRThin(PreconditionFailed):
    pass


class BaseNotDistinguishing(PreconditionFailed):
    pass


class ConstructionFailed(SymbreakError):
    """A construction produced a labeling that did not certify."""


class DocumentedException(SymbreakError):
    """A graph excluded from a bound; carries the exact witness for it."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class K3Exception(DocumentedException):
    pass


class K4Exception(DocumentedException):
    pass
