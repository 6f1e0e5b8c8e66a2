"""Representation-side parameter data for general linear groups over the
reals and the quaternions: essentially square integrable blocks, standard
modules, the parameter bijection, duals and character twists.

Only parameters are manipulated, never realized representations.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .errors import IllegalBlock, NotRelevant
from .exact import GR_HALF, GaussianRational, as_gaussian
from .weil import CxCharacter, WeilIrred, WeilRep, induce, one_dim, two_dim


class DivAlg(enum.Enum):
    """The coefficient division algebra: the reals or the quaternions."""

    R = "R"
    H = "H"

    @property
    def epsilon_sign(self) -> int:
        return -1 if self is DivAlg.R else 1


_BLOCK_SIZE = {"P1": 1, "P2": 2, "T": 1}
_PARAM_DIM = {"P1": 1, "P2": 2, "T": 2}
_LEGAL = {DivAlg.R: ("P1", "P2"), DivAlg.H: ("T",)}


@dataclass(frozen=True)
class EssDiscrete:
    """An essentially square integrable block.

    P1(k;lam): the character sgn^k |.|^lam of GL(1,R), k in {0,1}.
    P2(k;lam): the GL(2,R) series member with k >= 1.
    T(k;lam): the GL(1,H) representation of dimension k >= 1.
    """

    variant: str
    k: int
    lam: GaussianRational

    def __post_init__(self):
        object.__setattr__(self, "lam", as_gaussian(self.lam))
        if self.variant not in _BLOCK_SIZE:
            raise ValueError(f"unknown block variant {self.variant!r}")
        if self.variant == "P1":
            if self.k not in (0, 1):
                raise ValueError(f"P1 needs k in {{0,1}}, got {self.k}")
        elif self.k < 1:
            raise ValueError(f"{self.variant} needs k >= 1, got {self.k}")

    @property
    def size(self) -> int:
        return _BLOCK_SIZE[self.variant]

    @property
    def param_dim(self) -> int:
        return _PARAM_DIM[self.variant]

    def parameter(self) -> WeilIrred:
        if self.variant == "P1":
            return one_dim(self.k, self.lam)
        return two_dim(self.k, self.lam)

    def sort_key(self):
        return (self.size, self.k, self.lam.re, self.lam.im, self.variant)

    def __str__(self) -> str:
        return f"{self.variant}({self.k};{self.lam})"


def P1(k: int, lam) -> EssDiscrete:
    return EssDiscrete("P1", k, as_gaussian(lam))


def P2(k: int, lam) -> EssDiscrete:
    return EssDiscrete("P2", k, as_gaussian(lam))


def T(k: int, lam) -> EssDiscrete:
    return EssDiscrete("T", k, as_gaussian(lam))


def _exponent_key(b: EssDiscrete) -> Fraction:
    return b.lam.re / b.size


@dataclass(frozen=True)
class StandardModule:
    """An ordered product of blocks with nonincreasing normalized exponents."""

    D: DivAlg
    blocks: tuple[EssDiscrete, ...]

    def __post_init__(self):
        object.__setattr__(self, "blocks", tuple(self.blocks))
        for b in self.blocks:
            if b.variant not in _LEGAL[self.D]:
                raise IllegalBlock(f"{b} is not a block for D = {self.D.value}")
        keys = [_exponent_key(b) for b in self.blocks]
        if any(keys[i] < keys[i + 1] for i in range(len(keys) - 1)):
            raise IllegalBlock("blocks violate the exponent ordering; use make_standard")

    @property
    def total_size(self) -> int:
        return sum(b.size for b in self.blocks)

    @property
    def half_param_dim(self) -> int:
        """The n with G inside GL(2n); equals half the parameter dimension."""
        return sum(b.param_dim for b in self.blocks) // 2

    def __str__(self) -> str:
        return " x ".join(str(b) for b in self.blocks)


def make_standard(D: DivAlg, blocks) -> StandardModule:
    ordered = sorted(blocks, key=lambda b: (-_exponent_key(b),) + b.sort_key())
    return StandardModule(D, tuple(ordered))


@dataclass(frozen=True)
class IrrRepGL:
    """An irreducible representation, stored as the canonical block multiset."""

    D: DivAlg
    blocks: tuple[EssDiscrete, ...]

    def __post_init__(self):
        for b in self.blocks:
            if b.variant not in _LEGAL[self.D]:
                raise IllegalBlock(f"{b} is not a block for D = {self.D.value}")
        object.__setattr__(
            self, "blocks", tuple(sorted(self.blocks, key=EssDiscrete.sort_key))
        )

    @property
    def param_dim(self) -> int:
        return sum(b.param_dim for b in self.blocks)

    def __str__(self) -> str:
        return " x ".join(str(b) for b in self.blocks)


def quotient(sm: StandardModule) -> IrrRepGL:
    """The irreducible quotient of a standard module, as block data."""
    return IrrRepGL(sm.D, sm.blocks)


@dataclass(frozen=True)
class HeckeCharacter:
    """The character chi(z) = (z/|z|)^l |z|^eta of the nonzero complex numbers."""

    l: int
    eta: GaussianRational

    def __post_init__(self):
        object.__setattr__(self, "eta", as_gaussian(self.eta))

    def cx_character(self) -> CxCharacter:
        return CxCharacter(self.l, self.eta * GR_HALF)

    def at_minus_one(self) -> int:
        return -1 if self.l % 2 else 1

    def restriction_to_Rx(self) -> WeilIrred:
        """The Weil-group character restricting to sgn^l |.|^eta on the reals."""
        return one_dim(self.l % 2, self.eta)

    def inverse(self) -> "HeckeCharacter":
        return HeckeCharacter(-self.l, -self.eta)

    def __str__(self) -> str:
        return f"chi({self.l};{self.eta})"


def llc(pi: IrrRepGL) -> WeilRep:
    """The parameter attached to an irreducible: the sum of the block parameters."""
    return WeilRep(tuple(b.parameter() for b in pi.blocks))


def llc_inverse(phi: WeilRep, D: DivAlg) -> IrrRepGL:
    """Invert the parameter map; fails unless phi is relevant to a group over D."""
    blocks = []
    for s in phi:
        if D is DivAlg.H:
            if s.dim != 2:
                raise NotRelevant(f"{s} is one-dimensional; not relevant over H")
            blocks.append(T(s.k, s.lam))
        elif s.dim == 1:
            blocks.append(P1(s.k, s.lam))
        else:
            blocks.append(P2(s.k, s.lam))
    return IrrRepGL(D, tuple(blocks))


def dual_irr(pi: IrrRepGL) -> IrrRepGL:
    return IrrRepGL(pi.D, tuple(dual_block(b) for b in pi.blocks))


def dual_block(b: EssDiscrete) -> EssDiscrete:
    return EssDiscrete(b.variant, b.k, -b.lam)


def twist_block(b: EssDiscrete, chi: HeckeCharacter) -> EssDiscrete:
    """Twist one block by chi composed with the determinant.

    Size-one real blocks pick up the parity of l; the exponent shifts by
    eta uniformly (pinned by the tensor rule on parameters).
    """
    if b.variant == "P1":
        return P1((b.k + chi.l) % 2, b.lam + chi.eta)
    return EssDiscrete(b.variant, b.k, b.lam + chi.eta)


def twist_by_chi(pi: IrrRepGL, chi: HeckeCharacter) -> IrrRepGL:
    return IrrRepGL(pi.D, tuple(twist_block(b, chi) for b in pi.blocks))


def ind_chi_inverse(chi: HeckeCharacter) -> WeilRep:
    """The induction of the inverse character; splits when l = 0."""
    return induce(chi.inverse().cx_character())
