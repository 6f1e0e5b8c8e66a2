"""Independent oracles used to freeze expected values.

None of these reuse the decomposition rules under test: restriction
multisets and coset characters are computed from explicit matrix models,
bilinear forms are found by brute-force linear algebra, and involution
counts come from enumerating permutations.
"""

from __future__ import annotations

import itertools
from collections import Counter
from fractions import Fraction

from weilptb.exact import GaussianRational
from weilptb.langlands import HeckeCharacter
from weilptb.weil import WeilRep

LamKey = tuple[Fraction, Fraction]


def _lam_key(lam: GaussianRational) -> LamKey:
    return (lam.re, lam.im)


def cx_weights(rep: WeilRep) -> Counter:
    """Multiset of restriction characters on the nonzero complex numbers.

    A one-dimensional summand restricts to the (0, lam) character; a
    two-dimensional one to the pair (k, lam), (-k, lam).
    """
    out: Counter = Counter()
    for s in rep:
        if s.dim == 1:
            out[(0, _lam_key(s.lam))] += 1
        else:
            out[(s.k, _lam_key(s.lam))] += 1
            out[(-s.k, _lam_key(s.lam))] += 1
    return out


def convolve_weights(x: Counter, y: Counter) -> Counter:
    out: Counter = Counter()
    for (k1, l1), m1 in x.items():
        for (k2, l2), m2 in y.items():
            key = (k1 + k2, (l1[0] + l2[0], l1[1] + l2[1]))
            out[key] += m1 * m2
    return out


def jcoset_signature(rep: WeilRep) -> dict[LamKey, int]:
    """The character on the nonidentity coset at positive real points.

    Two-dimensional summands have trace zero there; a one-dimensional one
    contributes (-1)^k times the magnitude character, recorded per
    exponent.  This pins down the parity split of the characters, which
    the restriction multiset alone cannot see.
    """
    out: dict[LamKey, int] = {}
    for s in rep:
        if s.dim != 1:
            continue
        key = _lam_key(s.lam)
        out[key] = out.get(key, 0) + (-1) ** s.k
    return {k: v for k, v in out.items() if v}


def convolve_signatures(x: dict, y: dict) -> dict[LamKey, int]:
    out: dict[LamKey, int] = {}
    for l1, s1 in x.items():
        for l2, s2 in y.items():
            key = (l1[0] + l2[0], l1[1] + l2[1])
            out[key] = out.get(key, 0) + s1 * s2
    return {k: v for k, v in out.items() if v}


def check_tensor(x: WeilRep, y: WeilRep, claimed: WeilRep) -> bool:
    """Verify a claimed tensor decomposition against both character oracles."""
    if convolve_weights(cx_weights(x), cx_weights(y)) != cx_weights(claimed):
        return False
    return convolve_signatures(jcoset_signature(x), jcoset_signature(y)) == jcoset_signature(claimed)


def det_data(rep: WeilRep) -> tuple[int, LamKey]:
    """Determinant character computed from explicit matrix models.

    The restriction exponent is the sum over all restriction lines; the
    parity comes from the matrix determinant of the generator action:
    (-1)^k for a character, -(-1)^k for a two-dimensional summand.
    """
    sign = 1
    re, im = Fraction(0), Fraction(0)
    for s in rep:
        if s.dim == 1:
            sign *= (-1) ** s.k
            re += s.lam.re
            im += s.lam.im
        else:
            sign *= -((-1) ** s.k)
            re += 2 * s.lam.re
            im += 2 * s.lam.im
    return (0 if sign == 1 else 1, (re, im))


def _rat_det(rows: list[list[Fraction]]) -> Fraction:
    n = len(rows)
    if n == 0:
        return Fraction(1)
    if n == 1:
        return rows[0][0]
    total = Fraction(0)
    for j in range(n):
        if not rows[0][j]:
            continue
        minor = [[rows[i][c] for c in range(n) if c != j] for i in range(1, n)]
        term = rows[0][j] * _rat_det(minor)
        total += term if j % 2 == 0 else -term
    return total


def _nullspace(rows: list[list[Fraction]], width: int) -> list[list[Fraction]]:
    mat = [list(r) for r in rows]
    pivots: list[int] = []
    rank = 0
    for col in range(width):
        piv = next((r for r in range(rank, len(mat)) if mat[r][col]), None)
        if piv is None:
            continue
        mat[rank], mat[piv] = mat[piv], mat[rank]
        f = mat[rank][col]
        mat[rank] = [x / f for x in mat[rank]]
        for r in range(len(mat)):
            if r != rank and mat[r][col]:
                g = mat[r][col]
                mat[r] = [mat[r][j] - g * mat[rank][j] for j in range(width)]
        pivots.append(col)
        rank += 1
    basis = []
    for free in (c for c in range(width) if c not in pivots):
        v = [Fraction(0)] * width
        v[free] = Fraction(1)
        for rk, pc in enumerate(pivots):
            v[pc] = -mat[rk][free]
        basis.append(v)
    return basis


def gsp_bruteforce(phi: WeilRep, chi: HeckeCharacter) -> bool:
    """Search for an invariant nondegenerate antisymmetric pairing.

    Builds the explicit matrix model of phi, solves the linear conditions
    for a pairing with the required similitude, and scans a grid large
    enough to decide whether the solution space contains a nondegenerate
    form.  Intended for small dimensions only.
    """
    n = phi.dim
    if n == 0:
        return True
    lines: list[tuple[int, LamKey]] = []
    J = [[Fraction(0)] * n for _ in range(n)]
    pos = 0
    for s in phi:
        if s.dim == 1:
            lines.append((0, _lam_key(s.lam)))
            J[pos][pos] = Fraction((-1) ** s.k)
            pos += 1
        else:
            lines.append((s.k, _lam_key(s.lam)))
            lines.append((-s.k, _lam_key(s.lam)))
            J[pos][pos + 1] = Fraction((-1) ** s.k)
            J[pos + 1][pos] = Fraction(1)
            pos += 2
    eta = _lam_key(chi.eta)
    nu_j = (-1) ** (chi.l % 2)
    allowed = [
        (a, b)
        for a in range(n)
        for b in range(n)
        if lines[a][0] + lines[b][0] == 0
        and (lines[a][1][0] + lines[b][1][0], lines[a][1][1] + lines[b][1][1]) == eta
    ]
    if not allowed:
        return False
    var = {cell: idx for idx, cell in enumerate(allowed)}
    m = len(allowed)
    rows: list[list[Fraction]] = []
    for (a, b) in allowed:
        row = [Fraction(0)] * m
        row[var[(a, b)]] += 1
        if (b, a) in var:
            row[var[(b, a)]] += 1
        rows.append(row)
    for a in range(n):
        for b in range(n):
            row = [Fraction(0)] * m
            for (c, d) in allowed:
                coeff = J[c][a] * J[d][b]
                if coeff:
                    row[var[(c, d)]] += coeff
            if (a, b) in var:
                row[var[(a, b)]] -= nu_j
            if any(row):
                rows.append(row)
    basis = _nullspace(rows, m)
    if not basis:
        return False
    if len(basis) > 6:
        raise RuntimeError("form search space too large for a decisive grid scan")
    for combo in itertools.product(range(n + 1), repeat=len(basis)):
        B = [[Fraction(0)] * n for _ in range(n)]
        for t, vec in zip(combo, basis):
            if not t:
                continue
            for (a, b), idx in var.items():
                B[a][b] += t * vec[idx]
        if _rat_det(B):
            return True
    return False


def count_involutions(n: int, fixed_point_free: bool = False) -> int:
    """Brute force over all permutations of n letters."""
    total = 0
    for p in itertools.permutations(range(n)):
        if any(p[p[i]] != i for i in range(n)):
            continue
        if fixed_point_free and any(p[i] == i for i in range(n)):
            continue
        total += 1
    return total
