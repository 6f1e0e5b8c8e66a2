"""The algebra of finite-dimensional semisimple representations of the real
Weil group, in parameter form.

An irreducible is either a character of the Weil group (dimension one,
parity k in {0,1} and a complex exponent) or the two-dimensional induction
of a character of the multiplicative complex numbers.  Semisimple
representations are canonically sorted multisets of irreducibles, which
makes equivalence-class equality decidable.  Epsilon factors are computed
symbolically as unit-times-magnitude values.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator

from .errors import (
    BadParity,
    DetNotTrivial,
    NotOneDim,
    NotSelfDual,
    Reducible,
    WellDefinednessViolation,
)
from .exact import GR_HALF, GR_ZERO, GaussianRational, MagUnitValue, _frac, as_gaussian


@dataclass(frozen=True)
class CxCharacter:
    """The character z -> (z/|z|)^k |z|^(2*lam) of the nonzero complex numbers."""

    k: int
    lam: GaussianRational

    def __post_init__(self):
        object.__setattr__(self, "lam", as_gaussian(self.lam))


@dataclass(frozen=True)
class WeilIrred:
    """An irreducible Weil-group parameter.

    dim 1: the character with parity k in {0,1} and exponent lam.
    dim 2: the induced parameter with k >= 1 (k < 0 canonicalizes to |k|;
    k = 0 is reducible and rejected).
    """

    dim: int
    k: int
    lam: GaussianRational

    def __post_init__(self):
        object.__setattr__(self, "lam", as_gaussian(self.lam))
        if self.dim == 1:
            if self.k not in (0, 1):
                raise BadParity(f"one-dimensional parameter needs k in {{0,1}}, got {self.k}")
        elif self.dim == 2:
            if self.k == 0:
                raise Reducible("two-dimensional parameter with k = 0 splits; use induce()")
            object.__setattr__(self, "k", abs(self.k))
        else:
            raise ValueError(f"dim must be 1 or 2, got {self.dim}")

    def sort_key(self):
        return (self.dim, self.k, self.lam.re, self.lam.im)

    def __str__(self) -> str:
        return f"phi{self.dim}({self.k};{self.lam})"


def make_irred(dim: int, k: int, lam) -> WeilIrred:
    return WeilIrred(dim, k, as_gaussian(lam))


def one_dim(k: int, lam) -> WeilIrred:
    return WeilIrred(1, k, as_gaussian(lam))


def two_dim(k: int, lam) -> WeilIrred:
    return WeilIrred(2, k, as_gaussian(lam))


TRIVIAL = one_dim(0, 0)


@dataclass(frozen=True)
class WeilRep:
    """A semisimple parameter: a canonically sorted multiset of irreducibles."""

    summands: tuple[WeilIrred, ...]

    def __post_init__(self):
        object.__setattr__(
            self, "summands", tuple(sorted(self.summands, key=WeilIrred.sort_key))
        )

    @classmethod
    def of(cls, *irreds: WeilIrred) -> "WeilRep":
        return cls(tuple(irreds))

    @property
    def dim(self) -> int:
        return sum(s.dim for s in self.summands)

    def __iter__(self) -> Iterator[WeilIrred]:
        return iter(self.summands)

    def __len__(self) -> int:
        return len(self.summands)

    def __add__(self, other: "WeilRep") -> "WeilRep":
        return WeilRep(self.summands + other.summands)

    def __str__(self) -> str:
        if not self.summands:
            return "0"
        return "+".join(str(s) for s in self.summands)


def direct_sum(parts: Iterable[WeilRep]) -> WeilRep:
    out: list[WeilIrred] = []
    for p in parts:
        out.extend(p.summands)
    return WeilRep(tuple(out))


def induce(theta: CxCharacter) -> WeilRep:
    """Induction to the Weil group; splits into two characters when k = 0."""
    if theta.k == 0:
        return WeilRep.of(one_dim(0, theta.lam), one_dim(1, theta.lam))
    return WeilRep.of(two_dim(abs(theta.k), theta.lam))


def _tensor_irred(x: WeilIrred, y: WeilIrred) -> list[WeilIrred]:
    if x.dim == 1 and y.dim == 1:
        return [one_dim((x.k + y.k) % 2, x.lam + y.lam)]
    if x.dim == 1:
        x, y = y, x
    if y.dim == 1:
        # tensoring with a character only shifts the exponent
        return [two_dim(x.k, x.lam + y.lam)]
    lam = x.lam + y.lam
    out: list[WeilIrred] = []
    for k in (x.k + y.k, x.k - y.k):
        if k == 0:
            out.extend(induce(CxCharacter(0, lam)).summands)
        else:
            out.append(two_dim(abs(k), lam))
    return out


def tensor(x: WeilRep, y: WeilRep) -> WeilRep:
    """Tensor product, bilinear over direct sums, canonically sorted."""
    out: list[WeilIrred] = []
    for p in x:
        for q in y:
            out.extend(_tensor_irred(p, q))
    return WeilRep(tuple(out))


def dual(x: WeilRep) -> WeilRep:
    return WeilRep(tuple(WeilIrred(s.dim, s.k, -s.lam) for s in x))


def dual_irred(s: WeilIrred) -> WeilIrred:
    return WeilIrred(s.dim, s.k, -s.lam)


def det_irred(s: WeilIrred) -> WeilIrred:
    if s.dim == 1:
        return s
    return one_dim((s.k + 1) % 2, s.lam * 2)


def det_rep(x: WeilRep) -> WeilIrred:
    """Determinant character: the product of the summand determinants."""
    k, lam = 0, GR_ZERO
    for s in x:
        d = det_irred(s)
        k = (k + d.k) % 2
        lam = lam + d.lam
    return one_dim(k, lam)


def restrict_to_Rx(x: WeilIrred) -> tuple[int, GaussianRational]:
    """Restrict a one-dimensional parameter to the real line.

    Under the reciprocity map (positive x goes to the class of sqrt(x)),
    the character with data (k, lam) restricts to sgn^k |.|^lam; note the
    exponent halves relative to the complex normalization.
    """
    if x.dim != 1:
        raise NotOneDim("restriction to the real line needs a one-dimensional parameter")
    return (x.k, x.lam)


def epsilon(s, x: WeilRep, a) -> MagUnitValue:
    """Epsilon factor of x at s for the additive character of scale a.

    Each one-dimensional summand contributes (sgn(a) i)^k |a|^(lam+s-1/2),
    each two-dimensional one (sgn(a) i)^(k+1) |a|^(2(lam+s)-1); the sign of
    a is folded into the mod-4 unit exponent since sgn(a)^m i^m = i^(3m)
    for negative a.
    """
    a = _frac(a)
    if a == 0:
        raise ValueError("additive character scale must be nonzero")
    s = as_gaussian(s)
    base = abs(a)
    unit_mult = 3 if a < 0 else 1
    out = MagUnitValue.one()
    for summand in x:
        if summand.dim == 1:
            m = summand.k
            exp = summand.lam + s - GR_HALF
        else:
            m = summand.k + 1
            exp = (summand.lam + s) * 2 - 1
        out = out.mul(MagUnitValue(m * unit_mult, base, exp))
    return out


_PSI_SAMPLES = (Fraction(1), Fraction(-1), Fraction(2), Fraction(-3))


def root_number(x: WeilRep) -> int:
    """The sign epsilon(1/2, x) of a self-dual parameter with trivial determinant.

    Independence of the additive character is checked on a fixed sample of
    scales; disagreement would indicate a bug, not bad input.
    """
    if dual(x) != x:
        raise NotSelfDual(f"{x} is not self-dual")
    if det_rep(x) != TRIVIAL:
        raise DetNotTrivial(f"det({x}) = {det_rep(x)} is not trivial")
    values = [epsilon(GR_HALF, x, a) for a in _PSI_SAMPLES]
    first = values[0]
    if any(v != first for v in values):
        raise WellDefinednessViolation(f"epsilon of {x} depends on the additive character")
    if not first.is_unit() or first.i_exponent % 2:
        raise WellDefinednessViolation(f"epsilon of {x} is {first}, not a sign")
    return first.sign()
