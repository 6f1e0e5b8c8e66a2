"""Distinction predicates and the executable content of the main results:
the involution set for a standard module and a twisting character, the
symplectic-similitude test, the root-number identity, and the duality
corollary.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterator, Optional

from .errors import (
    IllegalBlock,
    MixedVariants,
    NotEligible,
    NotInT,
    OddDimension,
    PreconditionFailed,
)
from .exact import MagUnitValue
from .langlands import (
    DivAlg,
    EssDiscrete,
    HeckeCharacter,
    IrrRepGL,
    StandardModule,
    dual_block,
    ind_chi_inverse,
    llc,
    quotient,
    twist_block,
    twist_by_chi,
    dual_irr,
)
from .weil import WeilIrred, WeilRep, det_irred, dual_irred, root_number, tensor


@dataclass(frozen=True)
class Involution:
    """An involutive permutation of {0, ..., r-1} in one-line notation."""

    perm: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "perm", tuple(self.perm))
        r = len(self.perm)
        if sorted(self.perm) != list(range(r)):
            raise ValueError(f"{self.perm} is not a permutation")
        if any(self.perm[self.perm[i]] != i for i in range(r)):
            raise ValueError(f"{self.perm} is not involutive")

    @classmethod
    def identity(cls, r: int) -> "Involution":
        return cls(tuple(range(r)))

    def __call__(self, i: int) -> int:
        return self.perm[i]

    def __len__(self) -> int:
        return len(self.perm)

    def fixed_points(self) -> tuple[int, ...]:
        return tuple(i for i in range(len(self.perm)) if self.perm[i] == i)

    def two_cycles(self) -> tuple[tuple[int, int], ...]:
        return tuple(
            (i, self.perm[i]) for i in range(len(self.perm)) if self.perm[i] > i
        )

    def cycle_string(self) -> str:
        """One-indexed cycle notation; the identity prints as 'id'."""
        cycles = self.two_cycles()
        if not cycles:
            return "id"
        return "".join(f"({i + 1} {j + 1})" for i, j in cycles)


def involutions(r: int) -> Iterator[Involution]:
    """All involutions of {0,...,r-1}, ordered by one-line notation."""

    def build(perm: list[int], free: list[int]) -> Iterator[tuple[int, ...]]:
        if not free:
            yield tuple(perm)
            return
        i = free[0]
        perm[i] = i
        yield from build(perm, free[1:])
        for j in free[1:]:
            perm[i], perm[j] = j, i
            yield from build(perm, [x for x in free[1:] if x != j])
        perm[i] = i

    out = sorted(build([0] * r, list(range(r))))
    for p in out:
        yield Involution(p)


def esi_distinguished(pi: EssDiscrete, chi: HeckeCharacter) -> bool:
    """Whether a size-matching block is distinguished by chi on GL(1,C).

    With chi = (l, eta): a P2 block needs 2*lam = eta, |l| > k and k - l
    odd; a T block needs 2*lam = eta, |l| < k and k - l odd.  P1 blocks
    are never eligible.
    """
    if pi.variant == "P1":
        raise NotEligible("size-one real blocks are never fixed points")
    if pi.lam * 2 != chi.eta:
        return False
    if (pi.k - chi.l) % 2 == 0:
        return False
    if pi.variant == "P2":
        return abs(chi.l) > pi.k
    return abs(chi.l) < pi.k


def pair_distinguished(pi1: EssDiscrete, pi2: EssDiscrete, chi: HeckeCharacter) -> bool:
    """Whether pi1 is the chi-twisted dual of pi2 (blockwise pairing)."""
    if pi1.variant != pi2.variant:
        raise MixedVariants(f"cannot pair {pi1} with {pi2}")
    if pi1.lam + pi2.lam != chi.eta:
        return False
    if pi1.variant == "P1":
        return (pi1.k + pi2.k - chi.l) % 2 == 0
    return pi1.k == pi2.k


def _involution_admissible(sm: StandardModule, chi: HeckeCharacter, s: Involution) -> bool:
    blocks = sm.blocks
    for i in s.fixed_points():
        b = blocks[i]
        if b.variant == "P1":
            return False
        if not esi_distinguished(b, chi):
            return False
    for i, j in s.two_cycles():
        if blocks[i].size != blocks[j].size or blocks[i].variant != blocks[j].variant:
            return False
        if not pair_distinguished(blocks[i], blocks[j], chi):
            return False
    return True


def enumerate_T(sm: StandardModule, chi: HeckeCharacter) -> list[Involution]:
    """All involutions satisfying the distinction conditions, in a fixed order."""
    return [s for s in involutions(len(sm.blocks)) if _involution_admissible(sm, chi, s)]


def _twisted_dual(s: WeilIrred, nu: WeilIrred) -> WeilIrred:
    d = dual_irred(s)
    if d.dim == 1:
        return WeilIrred(1, (d.k + nu.k) % 2, d.lam + nu.lam)
    return WeilIrred(2, d.k, d.lam + nu.lam)


def is_gsp_with_similitude(phi: WeilRep, chi: HeckeCharacter) -> bool:
    """Decide whether phi preserves a symplectic form with similitude chi
    restricted to the reals.

    The test is the standard pairing argument: phi must equal its
    chi-twisted dual as a multiset, and every self-twisted-dual summand of
    orthogonal type must occur with even multiplicity.  A two-dimensional
    summand is symplectic type exactly when its determinant equals the
    similitude character; one-dimensional self-twisted-dual summands are
    always orthogonal type.
    """
    if phi.dim % 2:
        raise OddDimension(f"dim {phi.dim} is odd")
    nu = chi.restriction_to_Rx()
    counts = Counter(phi.summands)
    if counts != Counter(_twisted_dual(s, nu) for s in phi.summands):
        return False
    for s, mult in counts.items():
        if _twisted_dual(s, nu) != s:
            continue
        symplectic = s.dim == 2 and det_irred(s) == nu
        if not symplectic and mult % 2:
            return False
    return True


def epsilon_identity(
    pi: IrrRepGL, chi: HeckeCharacter
) -> tuple[MagUnitValue, int, bool]:
    """Evaluate both sides of the root-number identity.

    Returns (lhs as a unit value, rhs sign, agreement).  The left side is
    the root number of the parameter tensored with the induction of the
    inverse character; the right side is eps(D)^n chi(-1)^n.
    """
    phi = llc(pi)
    if not is_gsp_with_similitude(phi, chi):
        raise PreconditionFailed("the similitude condition fails; identity not asserted")
    rn = root_number(tensor(phi, ind_chi_inverse(chi)))
    n = phi.dim // 2
    rhs = (pi.D.epsilon_sign * chi.at_minus_one()) ** n
    lhs = MagUnitValue(0 if rn == 1 else 2, 1, 0)
    return lhs, rhs, rn == rhs


def abc_bookkeeping(
    sm: StandardModule, varsigma: Involution, chi: HeckeCharacter
) -> tuple[int, int, int]:
    """Count moved one-parameter-dimensional blocks (halved), moved
    two-dimensional ones (halved) and fixed points for an admissible
    involution; the triple satisfies a + 2b + c = n."""
    if len(varsigma) != len(sm.blocks) or not _involution_admissible(sm, chi, varsigma):
        raise NotInT(f"{varsigma.cycle_string()} does not satisfy the conditions")
    moved = [i for i in range(len(sm.blocks)) if varsigma(i) != i]
    a = sum(1 for i in moved if sm.blocks[i].param_dim == 1) // 2
    b = sum(1 for i in moved if sm.blocks[i].param_dim == 2) // 2
    c = len(sm.blocks) - len(moved)
    assert a + 2 * b + c == sm.half_param_dim
    return (a, b, c)


def abc_prediction(D: DivAlg, chi: HeckeCharacter, abc: tuple[int, int, int]) -> int:
    """The sign (eps(D) chi(-1))^(a+c) predicted for the root number."""
    a, _, c = abc
    return (D.epsilon_sign * chi.at_minus_one()) ** (a + c)


@dataclass
class DistinctionReport:
    """Everything the main-theorem check computes for one module."""

    T_set: list[Involution]
    hom_upper_bound: int
    gsp_ok: Optional[bool] = None
    epsilon_lhs: Optional[MagUnitValue] = None
    epsilon_rhs: Optional[int] = None
    identity_ok: Optional[bool] = None
    abc: Optional[tuple[int, int, int]] = None
    abc_ok: Optional[bool] = None


def check_main_theorem(sm: StandardModule, chi: HeckeCharacter) -> DistinctionReport:
    """Compute the involution set and, when it is nonempty, both necessary
    conditions for the quotient plus the bookkeeping cross-check.

    When the set is empty nothing is asserted (the bound is vacuous).
    """
    if sm.D is DivAlg.R and sm.total_size % 2:
        raise IllegalBlock("real standard modules need even total size")
    T_set = enumerate_T(sm, chi)
    report = DistinctionReport(T_set=T_set, hom_upper_bound=len(T_set))
    if not T_set:
        return report
    pi = quotient(sm)
    report.gsp_ok = is_gsp_with_similitude(llc(pi), chi)
    if report.gsp_ok:
        lhs, rhs, ok = epsilon_identity(pi, chi)
        report.epsilon_lhs, report.epsilon_rhs, report.identity_ok = lhs, rhs, ok
        direct = lhs.sign()
        report.abc_ok = True
        for varsigma in T_set:
            abc = abc_bookkeeping(sm, varsigma, chi)
            if abc_prediction(sm.D, chi, abc) != direct:
                report.abc_ok = False
        report.abc = abc_bookkeeping(sm, T_set[0], chi)
    else:
        report.identity_ok = False
    return report


def check_duality_corollary(sm: StandardModule, chi: HeckeCharacter) -> bool:
    """Whether the quotient equals its chi-twisted dual; vacuously true
    when the involution set is empty."""
    if not enumerate_T(sm, chi):
        return True
    pi = quotient(sm)
    return pi == twist_by_chi(dual_irr(pi), chi)


def paired_partner(b: EssDiscrete, chi: HeckeCharacter) -> EssDiscrete:
    """The unique block that pairs with b in a two-cycle."""
    return twist_block(dual_block(b), chi)
