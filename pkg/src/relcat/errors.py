"""Exception types shared across the package."""


class RelcatError(Exception):
    """Base class for every error raised by relcat."""


class TableShapeError(RelcatError):
    pass


class LawViolation(RelcatError):
    """A structure failed one of its defining laws.

    ``law`` names the law, ``witness`` holds the offending elements.
    """

    def __init__(self, law, witness, message=None):
        self.law = law
        self.witness = witness
        super().__init__(message or f"{law} fails at {witness}")


class TypeMismatch(RelcatError):
    def __init__(self, message, subterm=None):
        self.subterm = subterm
        super().__init__(message if subterm is None else f"{message} in {subterm}")


class UnsupportedStructural(RelcatError):
    pass


class UnsupportedCapability(RelcatError):
    pass


class BudgetZero(RelcatError):
    pass


class NotEnriched(RelcatError):
    pass


class NotParallel(RelcatError):
    pass


class UnknownKind(RelcatError):
    pass


class CarrierTooLarge(RelcatError):
    pass


class SemiringMismatch(RelcatError):
    pass


class FilterNotClosed(RelcatError):
    def __init__(self, message, witness=None):
        self.witness = witness
        super().__init__(message)


class MonadLawsFail(RelcatError):
    def __init__(self, message, reports=()):
        self.reports = list(reports)
        super().__init__(message)


class VariantNotClosed(RelcatError):
    def __init__(self, message, witness=None):
        self.witness = witness
        super().__init__(message)


class MonoidLawsFail(RelcatError):
    def __init__(self, message, witness=None):
        self.witness = witness
        super().__init__(message)


class OrderIncompatible(RelcatError):
    pass


class TermSyntaxError(RelcatError):
    """Parse failure; ``position`` is a 0-based character offset."""

    def __init__(self, message, position):
        self.position = position
        super().__init__(f"{message} at position {position}")


class UnknownName(RelcatError):
    """A generator or sort that is not declared; ``position`` is a 0-based offset when known."""

    def __init__(self, message, position=None):
        self.position = position
        super().__init__(message if position is None else f"{message} at position {position}")


class ArityMismatch(RelcatError):
    def __init__(self, message, subterm=None, expected=None, actual=None):
        self.subterm = subterm
        self.expected = expected
        self.actual = actual
        super().__init__(message)


class AssignmentMismatch(RelcatError):
    pass
