"""Exact rational feasibility for systems of linear inequalities.

Small Fourier-Motzkin elimination over Fractions.  A system is a list of
rows (coeffs, rhs) encoding sum(coeffs[j] * x[j]) >= rhs.  The solver
returns the lexicographically minimal feasible point in the sense of
greedy back-substitution: x[0] takes its smallest feasible value, then
x[1] given x[0], and so on.
"""

from __future__ import annotations

from fractions import Fraction

Row = tuple[tuple[Fraction, ...], Fraction]


def _normalize(coeffs: tuple[Fraction, ...], rhs: Fraction) -> Row:
    nonzero = [abs(c) for c in coeffs if c] or [abs(rhs) or Fraction(1)]
    scale = min(nonzero)
    return (tuple(c / scale for c in coeffs), rhs / scale)


def _eliminate_last(rows: list[Row]) -> list[Row] | None:
    """Project out the final variable; None signals an inconsistency."""
    lowers, uppers, rest = [], [], []
    for coeffs, rhs in rows:
        c = coeffs[-1]
        if c > 0:
            lowers.append((coeffs, rhs))
        elif c < 0:
            uppers.append((coeffs, rhs))
        else:
            if all(x == 0 for x in coeffs[:-1]) and rhs > 0:
                return None
            rest.append((coeffs[:-1], rhs))
    for lc, lb in lowers:
        for uc, ub in uppers:
            a, a2 = lc[-1], uc[-1]
            coeffs = tuple(a * uc[j] - a2 * lc[j] for j in range(len(lc) - 1))
            rhs = a * ub - a2 * lb
            if all(x == 0 for x in coeffs):
                if rhs > 0:
                    return None
                continue
            rest.append(_normalize(coeffs, rhs))
    return sorted(set(rest))


def feasible_point(rows: list[Row], dim: int) -> list[Fraction] | None:
    """A feasible point of the weak system, or None when it is empty."""
    stages: list[list[Row]] = [sorted({_normalize(c, b) for c, b in rows})]
    for _ in range(dim, 1, -1):
        projected = _eliminate_last(stages[-1])
        if projected is None:
            return None
        stages.append(projected)
    point: list[Fraction] = []
    for k in range(1, dim + 1):
        system = stages[dim - k]
        lo, hi = None, None
        for coeffs, rhs in system:
            c = coeffs[k - 1]
            if c == 0:
                residual = rhs - sum(coeffs[j] * point[j] for j in range(k - 1))
                if all(coeffs[j] == 0 for j in range(k - 1)) and residual > 0:
                    return None
                continue
            bound = (rhs - sum(coeffs[j] * point[j] for j in range(k - 1))) / c
            if c > 0:
                lo = bound if lo is None else max(lo, bound)
            else:
                hi = bound if hi is None else min(hi, bound)
        if lo is not None and hi is not None and lo > hi:
            return None
        if lo is not None:
            point.append(lo)
        elif hi is not None:
            point.append(min(hi, Fraction(0)))
        else:
            point.append(Fraction(0))
    return point
