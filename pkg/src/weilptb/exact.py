"""Exact scalars: Gaussian rationals, rational quaternions, and symbolic
unit-times-magnitude values.

Everything here is an immutable value with decidable structural equality;
no floating point is used anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import MixedBases


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"expected a rational, got {type(x).__name__}")


def _frac_str(x: Fraction) -> str:
    return str(x)


@dataclass(frozen=True)
class GaussianRational:
    """An element re + im*i of Q(i), with exact Fraction components."""

    re: Fraction
    im: Fraction

    def __post_init__(self):
        object.__setattr__(self, "re", _frac(self.re))
        object.__setattr__(self, "im", _frac(self.im))

    def __add__(self, other) -> "GaussianRational":
        other = as_gaussian(other)
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other) -> "GaussianRational":
        other = as_gaussian(other)
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __rsub__(self, other) -> "GaussianRational":
        return as_gaussian(other) - self

    def __mul__(self, other) -> "GaussianRational":
        other = as_gaussian(other)
        return GaussianRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __neg__(self) -> "GaussianRational":
        return GaussianRational(-self.re, -self.im)

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def norm_squared(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def key(self) -> tuple[Fraction, Fraction]:
        """Lexicographic sort key (no field ordering exists on Q(i))."""
        return (self.re, self.im)

    def __str__(self) -> str:
        if self.im == 0:
            return _frac_str(self.re)
        sign = "+" if self.im > 0 else "-"
        return f"{_frac_str(self.re)}{sign}{_frac_str(abs(self.im))}i"


def as_gaussian(x) -> GaussianRational:
    if isinstance(x, GaussianRational):
        return x
    return GaussianRational(_frac(x), Fraction(0))


GR_ZERO = GaussianRational(Fraction(0), Fraction(0))
GR_ONE = GaussianRational(Fraction(1), Fraction(0))
GR_I = GaussianRational(Fraction(0), Fraction(1))
GR_HALF = GaussianRational(Fraction(1, 2), Fraction(0))


def gr(re, im=0) -> GaussianRational:
    """Build a Gaussian rational from ints, Fractions or 'p/q' strings."""
    if isinstance(re, str):
        re = Fraction(re)
    if isinstance(im, str):
        im = Fraction(im)
    return GaussianRational(_frac(re), _frac(im))


def gr_arith(x: GaussianRational, y: GaussianRational, op: str):
    """Dispatch table for the basic Q(i) field operations.

    op is one of 'add', 'mul', 'neg', 'eq'; 'neg' ignores y.  Division is
    intentionally not exposed.
    """
    if op == "add":
        return x + y
    if op == "mul":
        return x * y
    if op == "neg":
        return -x
    if op == "eq":
        return x == y
    raise ValueError(f"unknown op {op!r}")


@dataclass(frozen=True)
class RationalQuaternion:
    """A quaternion a + b*i + c*j + d*k over the rationals."""

    a: Fraction
    b: Fraction
    c: Fraction
    d: Fraction

    def __post_init__(self):
        for name in ("a", "b", "c", "d"):
            object.__setattr__(self, name, _frac(getattr(self, name)))

    def __add__(self, other) -> "RationalQuaternion":
        other = as_quaternion(other)
        return RationalQuaternion(
            self.a + other.a, self.b + other.b, self.c + other.c, self.d + other.d
        )

    __radd__ = __add__

    def __sub__(self, other) -> "RationalQuaternion":
        return self + (-as_quaternion(other))

    def __rsub__(self, other) -> "RationalQuaternion":
        return as_quaternion(other) - self

    def __mul__(self, other) -> "RationalQuaternion":
        """Hamilton product; noncommutative (ij = k, ji = -k)."""
        other = as_quaternion(other)
        a1, b1, c1, d1 = self.a, self.b, self.c, self.d
        a2, b2, c2, d2 = other.a, other.b, other.c, other.d
        return RationalQuaternion(
            a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
        )

    def __rmul__(self, other) -> "RationalQuaternion":
        return as_quaternion(other) * self

    def __neg__(self) -> "RationalQuaternion":
        return RationalQuaternion(-self.a, -self.b, -self.c, -self.d)

    def __bool__(self) -> bool:
        return bool(self.a) or bool(self.b) or bool(self.c) or bool(self.d)

    def conjugate(self) -> "RationalQuaternion":
        return RationalQuaternion(self.a, -self.b, -self.c, -self.d)

    def reduced_norm(self) -> Fraction:
        return self.a**2 + self.b**2 + self.c**2 + self.d**2

    def inverse(self) -> "RationalQuaternion":
        n = self.reduced_norm()
        if n == 0:
            raise ZeroDivisionError("zero quaternion has no inverse")
        conj = self.conjugate()
        return RationalQuaternion(conj.a / n, conj.b / n, conj.c / n, conj.d / n)

    def coords(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return (self.a, self.b, self.c, self.d)

    def __str__(self) -> str:
        return (
            f"{_frac_str(self.a)}{'+' if self.b >= 0 else '-'}{_frac_str(abs(self.b))}i"
            f"{'+' if self.c >= 0 else '-'}{_frac_str(abs(self.c))}j"
            f"{'+' if self.d >= 0 else '-'}{_frac_str(abs(self.d))}k"
        )


def as_quaternion(x) -> RationalQuaternion:
    if isinstance(x, RationalQuaternion):
        return x
    return RationalQuaternion(_frac(x), Fraction(0), Fraction(0), Fraction(0))


def quat(a=0, b=0, c=0, d=0) -> RationalQuaternion:
    return RationalQuaternion(_frac(a), _frac(b), _frac(c), _frac(d))


Q_ZERO = quat(0)
Q_ONE = quat(1)
Q_I = quat(0, 1)
Q_J = quat(0, 0, 1)
Q_K = quat(0, 0, 0, 1)


def quat_mul(x: RationalQuaternion, y: RationalQuaternion) -> RationalQuaternion:
    return x * y


_UNIT_STR = {0: "1", 1: "i", 2: "-1", 3: "-i"}


@dataclass(frozen=True)
class MagUnitValue:
    """A value i^e * base^exponent with base a positive rational.

    Magnitudes stay symbolic: base^exponent is transcendental for generic
    exponents, so equality is decided on the exponent.  Canonical form has
    base 1 exactly when the exponent vanishes (and 1^x collapses to 1).
    """

    i_exponent: int
    mag_base: Fraction
    mag_exponent: GaussianRational

    def __post_init__(self):
        base = _frac(self.mag_base)
        if base <= 0:
            raise ValueError("magnitude base must be positive")
        exp = self.mag_exponent
        if not isinstance(exp, GaussianRational):
            exp = as_gaussian(exp)
        if base == 1 or not exp:
            base, exp = Fraction(1), GR_ZERO
        object.__setattr__(self, "i_exponent", self.i_exponent % 4)
        object.__setattr__(self, "mag_base", base)
        object.__setattr__(self, "mag_exponent", exp)

    @classmethod
    def one(cls) -> "MagUnitValue":
        return cls(0, Fraction(1), GR_ZERO)

    def mul(self, other: "MagUnitValue") -> "MagUnitValue":
        i_exp = self.i_exponent + other.i_exponent
        if self.mag_base == other.mag_base:
            return MagUnitValue(i_exp, self.mag_base, self.mag_exponent + other.mag_exponent)
        if not self.mag_exponent:
            return MagUnitValue(i_exp, other.mag_base, other.mag_exponent)
        if not other.mag_exponent:
            return MagUnitValue(i_exp, self.mag_base, self.mag_exponent)
        raise MixedBases(
            f"cannot combine bases {self.mag_base} and {other.mag_base}; "
            "keep a single additive-character scale per computation"
        )

    __mul__ = mul

    def is_unit(self) -> bool:
        return not self.mag_exponent

    def sign(self) -> int:
        """The value as +-1; raises unless the value is exactly a sign."""
        if self.mag_exponent or self.i_exponent % 2:
            raise ValueError(f"{self} is not +-1")
        return 1 if self.i_exponent == 0 else -1

    def __str__(self) -> str:
        unit = _UNIT_STR[self.i_exponent]
        if not self.mag_exponent:
            return unit
        return f"{unit}*|{_frac_str(self.mag_base)}|^{{{self.mag_exponent}}}"


def muv_mul(x: MagUnitValue, y: MagUnitValue) -> MagUnitValue:
    return x.mul(y)
