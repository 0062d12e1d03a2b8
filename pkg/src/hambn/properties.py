"""Decision procedures for function classes of local activation functions."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional

import numpy as np

from .core import BooleanNetwork, DimensionError, TruthTable, index_mask, states
from .exactlp import feasible_point
from .interaction import ArcSign, dependency_flags

#: Largest table size accepted by :func:`threshold_feasibility`.
THRESHOLD_MAX_N = 12


def is_balanced(f: BooleanNetwork) -> bool:
    half = 1 << (f.n - 1)
    return all(t.true_count == half for t in f.locals)


class UnateStatus(enum.Enum):
    MONOTONE = "monotone"
    UNATE = "unate"
    NOT_UNATE = "not-unate"


@dataclass(frozen=True)
class UnateReport:
    status: UnateStatus
    # (i, j) -> sign, filled when the network is unate
    signs: dict
    # (j, i, x, x'): x_i = x'_i = 0, f_j increases at x and decreases at x'
    witness: Optional[tuple[int, int, int, int]] = None

    @property
    def is_unate(self) -> bool:
        return self.status is not UnateStatus.NOT_UNATE


def _unate_witness(f: BooleanNetwork, i: int, j: int) -> tuple[int, int, int, int]:
    words = states(f.n)
    low = words[((words >> (i - 1)) & 1) == 0]
    values = f.locals[j - 1].values
    a, b = values[low], values[low | (1 << (i - 1))]
    x = int(low[np.argmax(a < b)])
    x2 = int(low[np.argmax(a > b)])
    return (j, i, x, x2)


def unate_analysis(f: BooleanNetwork) -> UnateReport:
    inc, dec = dependency_flags(f)
    mixed = np.argwhere(inc & dec)
    if mixed.size:
        # smallest j first, then smallest i
        pairs = sorted((int(b) + 1, int(a) + 1) for a, b in mixed)
        j, i = pairs[0]
        return UnateReport(UnateStatus.NOT_UNATE, {}, _unate_witness(f, i, j))
    signs = {}
    for i in range(f.n):
        for j in range(f.n):
            if inc[i, j]:
                signs[(i + 1, j + 1)] = ArcSign.POSITIVE
            elif dec[i, j]:
                signs[(i + 1, j + 1)] = ArcSign.NEGATIVE
    monotone = all(s is ArcSign.POSITIVE for s in signs.values())
    return UnateReport(UnateStatus.MONOTONE if monotone else UnateStatus.UNATE, signs)


@dataclass(frozen=True)
class SelfDuality:
    """Outcome of a self-duality check; truthy when the identity holds."""

    holds: bool
    counterexample: Optional[int] = None

    def __bool__(self) -> bool:
        return self.holds


def is_self_dual(f: BooleanNetwork, index_set: Iterable[int]) -> SelfDuality:
    """Check ``f(x) = neg_I(f(neg_I(x)))`` on every configuration."""
    mask = index_mask(index_set, f.n)
    if mask == 0:
        raise ValueError("self-duality needs a non-empty index set")
    words = states(f.n)
    succ = f.successor
    bad = np.flatnonzero(succ != (succ[words ^ mask] ^ mask))
    if bad.size:
        return SelfDuality(False, int(bad[0]))
    return SelfDuality(True)


@dataclass(frozen=True)
class ThresholdCertificate:
    feasible: bool
    weights: tuple[Fraction, ...] = ()
    threshold: Optional[Fraction] = None

    def verify(self, t: TruthTable) -> bool:
        """Direct substitution: ``w.x >= b`` on true points, ``<= b - 1`` on false points."""
        if not self.feasible:
            return False
        den = math.lcm(*(v.denominator for v in (*self.weights, self.threshold)))
        a = np.array([int(v * den) for v in self.weights], dtype=object)
        b = int(self.threshold * den)
        words = states(t.n)
        bits = ((words[:, None] >> np.arange(t.n)) & 1).astype(object)
        sums = bits.dot(a)
        true = t.values.astype(bool)
        return bool(np.all(sums[true] >= b) and np.all(sums[~true] <= b - den))


def _local_signs(t: TruthTable) -> list[int]:
    """+1 / -1 / 0 (irrelevant) per variable, or raise if some variable is binate."""
    f = BooleanNetwork([t] + [TruthTable.constant(t.n, 0)] * (t.n - 1))
    inc, dec = dependency_flags(f)
    out = []
    for i in range(t.n):
        if inc[i, 0] and dec[i, 0]:
            raise _Binate(i + 1)
        out.append(1 if inc[i, 0] else (-1 if dec[i, 0] else 0))
    return out


class _Binate(Exception):
    pass


def threshold_feasibility(t: TruthTable) -> ThresholdCertificate:
    """Decide linear separability exactly.

    A threshold function is unate, so a binate variable settles the question.
    Otherwise the function is flipped to a monotone one, only its minimal true
    and maximal false points are kept (with non-negative weights these imply
    the rest), and the reduced system is solved in exact arithmetic. The
    returned certificate is in the original variables.
    """
    n = t.n
    if n > THRESHOLD_MAX_N:
        raise DimensionError(f"threshold check is capped at n={THRESHOLD_MAX_N}")
    try:
        signs = _local_signs(t)
    except _Binate:
        return ThresholdCertificate(False)
    flip = sum(1 << i for i in range(n) if signs[i] < 0)
    words = states(n)
    g = t.values[words ^ flip].astype(bool)  # monotone increasing in every variable
    minimal = g.copy()
    maximal = ~g
    for i in range(n):
        has = ((words >> i) & 1).astype(bool)
        minimal &= ~(has & g[words ^ (1 << i)])
        maximal &= ~(~has & ~g[words ^ (1 << i)])
    rows, rhs = [], []
    for x in np.flatnonzero(minimal).tolist():
        rows.append([(x >> i) & 1 for i in range(n)] + [-1])
        rhs.append(0)
    for x in np.flatnonzero(maximal).tolist():
        rows.append([-((x >> i) & 1) for i in range(n)] + [1])
        rhs.append(1)
    for i in range(n):
        rows.append([int(k == i) for k in range(n)] + [0])
        rhs.append(0)
    y = feasible_point(rows, rhs)
    if y is None:
        return ThresholdCertificate(False)
    a_flip, b_flip = y[:n], y[n]
    weights = tuple(-a if (flip >> i) & 1 else a for i, a in enumerate(a_flip))
    threshold = b_flip - sum((a for i, a in enumerate(a_flip) if (flip >> i) & 1), Fraction(0))
    cert = ThresholdCertificate(True, tuple(Fraction(w) for w in weights), Fraction(threshold))
    if not cert.verify(t):
        raise AssertionError("threshold certificate failed substitution")
    return cert


def _encode(points: np.ndarray, n: int, base: int) -> np.ndarray:
    enc = np.zeros(len(points), dtype=np.int64)
    for i in range(n):
        enc += ((points >> i) & 1) * base**i
    return enc


def _sum_levels(enc: np.ndarray, k: int, size: int) -> list[np.ndarray]:
    """``levels[k][s]`` is true when ``s`` is the encoded sum of ``k`` points (repetition allowed).

    Digit sums never exceed ``k < base``, so encoded addition does not carry.
    """
    levels = [np.zeros(size, dtype=bool)]
    levels[0][0] = True
    for _ in range(k):
        prev, nxt = levels[-1], np.zeros(size, dtype=bool)
        for e in enc.tolist():
            nxt[e:] |= prev[: size - e]
        levels.append(nxt)
    return levels


def _unwind(target: int, levels, enc, points, k: int) -> list[int]:
    out = []
    for level in range(k, 0, -1):
        prev = levels[level - 1]
        for idx, e in enumerate(enc.tolist()):
            if e <= target and prev[target - e]:
                out.append(int(points[idx]))
                target -= e
                break
    return sorted(out)


def assumability_violation(t: TruthTable, k_max: int = 3):
    """True points ``x^1..x^k`` and false points ``y^1..y^k`` with equal sums.

    Exhaustive for every ``k <= k_max`` (smallest ``k`` reported first).
    Sums are encoded in base ``k_max + 1`` per coordinate and tracked as
    bitsets over all ``(k_max + 1)**n`` encodings.
    Returns ``(true_points, false_points)`` as sorted word lists, or None.
    """
    if k_max < 2:
        raise ValueError("k_max must be at least 2")
    T = t.true_points().astype(np.int64)
    F = t.false_points().astype(np.int64)
    if len(T) == 0 or len(F) == 0:
        return None
    base = k_max + 1
    size = base**t.n
    t_enc, f_enc = _encode(T, t.n, base), _encode(F, t.n, base)
    t_levels = _sum_levels(t_enc, k_max, size)
    f_levels = _sum_levels(f_enc, k_max, size)
    for k in range(1, k_max + 1):
        common = np.flatnonzero(t_levels[k] & f_levels[k])
        if common.size:
            s = int(common[0])
            return (_unwind(s, t_levels, t_enc, T, k), _unwind(s, f_levels, f_enc, F, k))
    return None
