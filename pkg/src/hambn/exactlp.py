"""Exact rational feasibility for systems ``A y >= c`` with free ``y``.

Solved through the bounded Farkas dual

    max c.λ   s.t.   Aᵀλ = 0,  Σλ + s = 1,  λ, s >= 0

with a revised simplex over :class:`fractions.Fraction`. The optimum is 0
exactly when the primal is feasible, and the simplex multipliers of the
optimal basis then give a primal point. Pricing is Dantzig's rule, falling
back to Bland's rule while pivots are degenerate (so it cannot cycle).
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence

import numpy as np


class LPError(RuntimeError):
    pass


def _dot(w: list[Fraction], col: Sequence[int]) -> Fraction:
    return sum((wk * ck for wk, ck in zip(w, col) if ck), Fraction(0))


def feasible_point(rows: Sequence[Sequence[int]], rhs: Sequence[int], max_iter: int = 100_000):
    """Return ``y`` (list of Fractions) with ``rows @ y >= rhs``, or None if none exists."""
    A = np.asarray(rows, dtype=np.int64)
    c = [int(v) for v in rhs]
    m, d = A.shape
    R = d + 1
    # column j < m: (A[j], 1), cost c[j]; column m: slack e_d, cost 0
    M = np.zeros((m + 1, R), dtype=np.int64)
    M[:m, :d] = A
    M[:m, d] = 1
    M[m, d] = 1
    Mlist = M.tolist()
    cost = c + [0]
    ncols = m + 1
    # basis entries: >= 0 real column, < 0 artificial for row (-k - 1)
    basis = [-(r + 1) for r in range(d)] + [m]
    Binv = [[Fraction(int(r == k)) for k in range(R)] for r in range(R)]
    xB = [Fraction(0)] * d + [Fraction(1)]

    def column(j: int) -> list[Fraction]:
        col = Mlist[j]
        return [_dot(Binv[r], col) for r in range(R)]

    def pivot(p: int, j: int, dcol: list[Fraction]) -> None:
        piv = dcol[p]
        Binv[p] = [v / piv for v in Binv[p]]
        xB[p] = xB[p] / piv
        for r in range(R):
            if r != p and dcol[r]:
                factor = dcol[r]
                Binv[r] = [a - factor * b for a, b in zip(Binv[r], Binv[p])]
                xB[r] -= factor * xB[p]
        basis[p] = j

    # drive artificials out where the row is not redundant (degenerate pivots)
    for p in range(R):
        if basis[p] >= 0:
            continue
        inbasis = set(basis)
        for j in range(ncols):
            if j in inbasis:
                continue
            entry = _dot(Binv[p], Mlist[j])
            if entry:
                pivot(p, j, column(j))
                break

    Mobj = M.astype(object)
    bland = False
    for _ in range(max_iter):
        cB = [Fraction(cost[b]) if b >= 0 else Fraction(0) for b in basis]
        w = [sum((cB[r] * Binv[r][k] for r in range(R)), Fraction(0)) for k in range(R)]
        den = math.lcm(*(v.denominator for v in w))
        W = np.array([int(v * den) for v in w], dtype=object)
        reduced = np.array([ci * den for ci in cost], dtype=object) - Mobj.dot(W)
        inbasis = set(basis)
        candidates = [j for j in range(ncols) if reduced[j] > 0 and j not in inbasis]
        if not candidates:
            break
        j = candidates[0] if bland else max(candidates, key=lambda k: (reduced[k], -k))
        dcol = column(j)
        best = None
        for r in range(R):
            if dcol[r] > 0:
                ratio = xB[r] / dcol[r]
                key = (ratio, basis[r])
                if best is None or key < best[0]:
                    best = (key, r)
        if best is None:
            raise LPError("unbounded direction in a bounded program")
        degenerate = best[0][0] == 0
        pivot(best[1], j, dcol)
        bland = degenerate
    else:
        raise LPError("iteration limit reached")

    value = sum(
        (Fraction(cost[b]) * x for b, x in zip(basis, xB) if b >= 0), Fraction(0)
    )
    if value > 0:
        return None
    return w[:d]
