"""Exception hierarchy shared by every module of the package."""


class ParityError(Exception):
    """Base class for all errors raised by twoparity."""


class ValuationOfZero(ParityError, ValueError):
    pass


class NotAUnit(ParityError, ValueError):
    pass


class ZeroArgument(ParityError, ValueError):
    pass


class NotPrime(ParityError, ValueError):
    pass


class DivisionByZeroPoly(ParityError, ZeroDivisionError):
    pass


class DegreeTooSmall(ParityError, ValueError):
    pass


class NotSquarefree(ParityError, ValueError):
    pass


class DegenerateSturm(ParityError):
    """The Sturm chain violates the degree or constant-term hypotheses.

    ``index`` is the first position of the chain at which a hypothesis fails.
    """

    def __init__(self, index, reason):
        self.index = index
        self.reason = reason
        super().__init__(f"degenerate Sturm chain at P_{index}: {reason}")


class RootAtZero(ParityError, ValueError):
    pass


class NotSeparable(ParityError, ValueError):
    pass


class NotIntegral(ParityError, ValueError):
    pass


class EvenPrimeUnsupported(ParityError):
    pass


class Unsupported(ParityError):
    def __init__(self, reason):
        self.reason = reason
        super().__init__(reason)


class UnsupportedPlace(Unsupported):
    pass


class FilterInapplicable(ParityError):
    pass


class CannotInfer(ParityError):
    pass


class StrictModeUnsupported(ParityError):
    def __init__(self, places):
        self.places = tuple(places)
        names = ", ".join(str(p) for p in self.places)
        super().__init__(f"strict mode: unsupported places {{{names}}}")


class BranchMismatch(ParityError):
    pass


class ParseError(ParityError, ValueError):
    """Malformed polynomial or cubic literal; ``position`` is a 0-based column."""

    def __init__(self, message, text, position):
        self.text = text
        self.position = position
        super().__init__(f"{message} at position {position}: {text!r}")
