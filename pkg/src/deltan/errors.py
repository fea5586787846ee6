"""Exception types shared across the package."""


class DeltanError(Exception):
    """Base class for all errors raised by this package."""


class InvalidSpecError(DeltanError):
    """A ring/module specification violates its invariants."""


class CrossRingError(DeltanError):
    """Operands belong to different rings."""


class InfiniteRingError(DeltanError):
    """An enumeration was requested on the infinite integer backend."""


class ImproperIdealError(DeltanError):
    """A predicate defined only for proper ideals was applied to the whole ring."""


class ExpansionAxiomError(DeltanError):
    """A candidate expansion violates extensivity or monotonicity."""


class HomomorphismError(DeltanError):
    """A map fails a ring-homomorphism axiom, or is unfit for the operation."""


class ConstructionError(DeltanError):
    """A derived-ring construction was given invalid data (e.g. IM not in N)."""


class UnknownClaimError(DeltanError):
    """A claim id is not present in the registry."""


class DslError(DeltanError):
    """Syntax or binding error in the little specification language."""

    def __init__(self, message, line=1, column=1, expected=()):
        super().__init__(message)
        self.line = line
        self.column = column
        self.expected = tuple(expected)

    def __str__(self):
        base = super().__str__()
        loc = f"{self.line}:{self.column}"
        if self.expected:
            return f"{base} at {loc} (expected one of: {', '.join(self.expected)})"
        return f"{base} at {loc}"
