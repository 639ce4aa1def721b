"""Exception hierarchy shared by every engine in the package."""


class TangleError(Exception):
    """Base class for domain errors; the CLI maps these to exit status 1."""


class IndefiniteProduct(TangleError):
    """A slope product of infinity and zero was requested."""


class NonTrivialSumViolation(TangleError):
    """A tangle sum was given a rational summand of slope 0 or infinity."""


class LoopPresent(TangleError):
    """The operation requires a tangle without closed loop components."""


class ClosedSubtangle(TangleError):
    """The tangle contains a closed algebraic sub-tangle."""


class Disconnected(TangleError):
    """No searched parallelism produced a connected surface."""


class InvalidTemplate(TangleError):
    """A diagram template failed validation."""

    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("; ".join(self.violations) or "invalid template")


class NotAlgebraicallyAlternating(TangleError):
    """The decision procedures only apply to algebraically alternating diagrams."""


class PreconditionViolated(TangleError):
    pass


class ParseError(TangleError):
    """Malformed tangle expression text."""

    def __init__(self, position, expected, found):
        self.position = position
        self.expected = expected
        self.found = found
        super().__init__(f"at offset {position}: expected {expected}, found {found}")
