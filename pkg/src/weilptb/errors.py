"""Exception types shared across the package."""


class WeilPtbError(Exception):
    """Base class for all errors raised by this package."""


class MixedBases(WeilPtbError):
    """Two magnitude values with distinct bases and nonzero exponents."""


class Reducible(WeilPtbError):
    """A two-dimensional parameter with k = 0 is not irreducible."""


class BadParity(WeilPtbError):
    """A one-dimensional parameter needs k in {0, 1}."""


class NotOneDim(WeilPtbError):
    """Operation defined only for one-dimensional summands."""


class NotSelfDual(WeilPtbError):
    """Root numbers need a self-dual parameter."""


class DetNotTrivial(WeilPtbError):
    """Root numbers need a parameter with trivial determinant."""


class WellDefinednessViolation(WeilPtbError):
    """Internal consistency assertion failed; indicates a bug, never bad input."""


class IllegalBlock(WeilPtbError):
    """Block variant not legal for the given division algebra."""


class NotRelevant(WeilPtbError):
    """Parameter is not relevant to the requested group."""


class NotEligible(WeilPtbError):
    """Size-one real blocks are never fixed points of a distinction involution."""


class MixedVariants(WeilPtbError):
    """Pair criteria need two blocks of the same variant."""


class OddDimension(WeilPtbError):
    """Symplectic similitude tests need an even-dimensional parameter."""


class PreconditionFailed(WeilPtbError):
    """The similitude condition fails, so the identity is not asserted."""


class NotInT(WeilPtbError):
    """The involution does not satisfy the distinction conditions."""


class ConsistencyViolation(WeilPtbError):
    """Two independent computation paths disagree; indicates a bug."""


class NotLeviStable(WeilPtbError):
    """Operation needs an orbit matrix whose involution preserves the Levi."""


class SampleNotInH(WeilPtbError):
    """A constructed sample failed its fixed-point membership check."""


class Infeasible(WeilPtbError):
    """The rational feasibility search found no point; signals a bad datum."""


class ParseError(WeilPtbError):
    """Syntax error with a byte offset and the expected token class."""

    def __init__(self, offset: int, expected: str, found: str = ""):
        self.offset = offset
        self.expected = expected
        self.found = found
        what = f"expected {expected} at offset {offset}"
        if found:
            what += f", found {found!r}"
        super().__init__(what)
