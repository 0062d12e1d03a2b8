"""State transition graphs and their Hamiltonian taxonomy."""

from __future__ import annotations

import enum
import math
from collections import Counter
from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np

from .core import BooleanNetwork, DimensionError


class TrajectoryError(ValueError):
    """A forced walk repeated an arc before reaching the requested length."""

    def __init__(self, message: str, arc: tuple[int, int]):
        super().__init__(message)
        self.arc = arc


class FunctionalGraph:
    """Digraph on ``2**n`` states where every state has exactly one successor."""

    __slots__ = ("n", "successor")

    def __init__(self, successor: Sequence[int], n: int | None = None):
        succ = np.array(successor, dtype=np.int64)
        size = succ.shape[0]
        if n is None:
            n = size.bit_length() - 1
        if size != 1 << n or n < 1:
            raise DimensionError(f"functional graph on {size} states is not over 2**n states")
        if size and (succ.min() < 0 or succ.max() >= size):
            raise DimensionError("successor outside the state set")
        succ.setflags(write=False)
        self.n = n
        self.successor = succ

    @property
    def size(self) -> int:
        return 1 << self.n

    def __eq__(self, other) -> bool:
        return isinstance(other, FunctionalGraph) and np.array_equal(
            self.successor, other.successor
        )

    def __hash__(self) -> int:
        return hash(self.successor.tobytes())

    def __repr__(self) -> str:
        return f"FunctionalGraph(n={self.n})"

    def relabel(self, perm: Sequence[int]) -> "FunctionalGraph":
        """Conjugate by a state permutation: state ``s`` becomes ``perm[s]``."""
        perm = np.asarray(perm, dtype=np.int64)
        new = np.empty_like(perm)
        new[perm] = perm[self.successor]
        return FunctionalGraph(new, self.n)


def transition_graph(f: BooleanNetwork) -> FunctionalGraph:
    """``Γ(f)``."""
    return FunctionalGraph(f.successor, f.n)


@dataclass
class DynamicsSummary:
    fixed_points: list[int]
    limit_cycles: list[list[int]]
    gardens: list[int]
    height: int
    period: int
    preimage_histogram: dict[int, int]
    # state -> distance to the periodic set
    depth: np.ndarray = field(repr=False)

    @property
    def attractors(self) -> list[list[int]]:
        """Fixed points (as 1-cycles) and limit cycles, ordered by smallest state."""
        cycles = [[p] for p in self.fixed_points] + self.limit_cycles
        return sorted(cycles, key=min)


def _peel(succ: np.ndarray) -> tuple[list[int], np.ndarray]:
    """Strip transient states leaf-first.

    Returns the removal order (every transient state precedes its successor)
    and a boolean mask of periodic states.
    """
    size = succ.shape[0]
    indeg = np.bincount(succ, minlength=size).tolist()
    s = succ.tolist()
    order = [v for v in range(size) if indeg[v] == 0]
    k = 0
    while k < len(order):
        w = s[order[k]]
        indeg[w] -= 1
        if indeg[w] == 0:
            order.append(w)
        k += 1
    periodic = np.ones(size, dtype=bool)
    periodic[order] = False
    return order, periodic


def _cycles(succ: np.ndarray, periodic: np.ndarray) -> list[list[int]]:
    s = succ.tolist()
    seen = ~periodic.copy()
    cycles = []
    for v in np.flatnonzero(periodic).tolist():
        if seen[v]:
            continue
        cyc = [v]
        seen[v] = True
        w = s[v]
        while w != v:
            cyc.append(w)
            seen[w] = True
            w = s[w]
        cycles.append(cyc)
    return cycles


def analyze(g: FunctionalGraph) -> DynamicsSummary:
    """Attractors, gardens of Eden, height, period and in-degree histogram."""
    succ = g.successor
    order, periodic = _peel(succ)
    cycles = _cycles(succ, periodic)
    s = succ.tolist()
    depth = [0] * g.size
    for v in reversed(order):
        depth[v] = depth[s[v]] + 1
    indeg = np.bincount(succ, minlength=g.size)
    hist = Counter(indeg.tolist())
    return DynamicsSummary(
        fixed_points=[c[0] for c in cycles if len(c) == 1],
        limit_cycles=[c for c in cycles if len(c) > 1],
        gardens=np.flatnonzero(indeg == 0).tolist(),
        height=max(depth) if depth else 0,
        period=math.lcm(*(len(c) for c in cycles)),
        preimage_histogram=dict(sorted(hist.items())),
        depth=np.asarray(depth, dtype=np.int64),
    )


class Kind(enum.Enum):
    MAX_HEIGHT = "max-height"
    INTERMEDIATE = "intermediate"
    HAMILTONIAN_CYCLE = "hamiltonian-cycle"
    QUASI_HAMILTONIAN = "quasi-hamiltonian"
    NOT_HAMILTONIAN = "not-hamiltonian"


@dataclass(frozen=True)
class HamiltonianClass:
    kind: Kind
    cycle_length: Optional[int] = None

    @property
    def is_hamiltonian(self) -> bool:
        return self.kind in (Kind.MAX_HEIGHT, Kind.INTERMEDIATE, Kind.HAMILTONIAN_CYCLE)

    def __str__(self) -> str:
        if self.kind is Kind.INTERMEDIATE:
            return f"intermediate({self.cycle_length})"
        return self.kind.value


MAX_HEIGHT = HamiltonianClass(Kind.MAX_HEIGHT, 1)
QUASI_HAMILTONIAN = HamiltonianClass(Kind.QUASI_HAMILTONIAN)
NOT_HAMILTONIAN = HamiltonianClass(Kind.NOT_HAMILTONIAN)


def _classify_summary(summary: DynamicsSummary, n: int) -> HamiltonianClass:
    size = 1 << n
    attractors = summary.attractors
    if len(attractors) == 1:
        length = len(attractors[0])
        if length == size:
            return HamiltonianClass(Kind.HAMILTONIAN_CYCLE, size)
        # one path through all transient states <=> the longest tail holds them all
        if summary.height == size - length:
            if length == 1:
                return MAX_HEIGHT
            return HamiltonianClass(Kind.INTERMEDIATE, length)
        return NOT_HAMILTONIAN
    if (
        len(attractors) == 2
        and size - 1 >= 2
        and sorted(len(a) for a in attractors) == [1, size - 1]
    ):
        return QUASI_HAMILTONIAN
    return NOT_HAMILTONIAN


def classify(g: FunctionalGraph) -> HamiltonianClass:
    """Place ``g`` in the Hamiltonian taxonomy."""
    return _classify_summary(analyze(g), g.n)


def trajectory(g: FunctionalGraph, start: int, length: int) -> list[int]:
    """The forced walk ``start, g(start), ...`` with ``length`` arcs."""
    if not 0 <= start < g.size:
        raise DimensionError(f"state {start} out of range")
    if not 0 <= length <= g.size:
        raise ValueError(f"trajectory length must be in 0..{g.size}")
    s = g.successor
    path = [int(start)]
    used = set()
    v = int(start)
    for _ in range(length):
        if v in used:
            raise TrajectoryError(f"arc {v}->{int(s[v])} repeats", (v, int(s[v])))
        used.add(v)
        v = int(s[v])
        path.append(v)
    return path


def _arc_sources(s: list[int], start: int, m: int) -> int | None:
    """Bitmask of the ``m`` arc sources of the walk from ``start``; None if an arc repeats."""
    mask = 0
    v = start
    for _ in range(m):
        bit = 1 << v
        if mask & bit:
            return None
        mask |= bit
        v = s[v]
    return mask


def two_hamiltonian_witness(g: FunctionalGraph) -> tuple[int, int] | None:
    """Starts ``(u, v)`` of two arc-disjoint trajectories of length ``2**(n-1)`` covering every arc.

    Out-degree one makes each trajectory forced, so the search is over start
    pairs only. Arcs are identified with their sources; the smallest ``u``
    (then ``v``) is returned.
    """
    m = g.size // 2
    s = g.successor.tolist()
    full = (1 << g.size) - 1
    by_mask: dict[int, int] = {}
    valid = []
    for u in range(g.size):
        mask = _arc_sources(s, u, m)
        if mask is not None:
            valid.append((u, mask))
            by_mask.setdefault(mask, u)
    for u, mask in valid:
        v = by_mask.get(full ^ mask)
        if v is not None:
            return u, v
    return None


# canonical forms -----------------------------------------------------------


def _least_rotation(seq: list[int]) -> int:
    """Start index of the lexicographically least rotation (Booth)."""
    doubled = seq + seq
    n = len(doubled)
    fail = [-1] * n
    k = 0
    for j in range(1, n):
        sj = doubled[j]
        i = fail[j - k - 1]
        while i != -1 and sj != doubled[k + i + 1]:
            if sj < doubled[k + i + 1]:
                k = j - i - 1
            i = fail[i]
        if sj != doubled[k + i + 1]:
            if sj < doubled[k]:
                k = j
            fail[j - k] = -1
        else:
            fail[j - k] = i + 1
    return k % len(seq)


def canonical_form(g: FunctionalGraph) -> bytes:
    """Byte string equal for two functional graphs iff they are isomorphic.

    Transient in-trees hanging on cycle states get AHU labels assigned level
    by level (by tree height, sorted child-label tuples), so labels depend
    only on the isomorphism class. The form stores the label table, then each
    component as the least rotation of its cycle's root labels, components
    sorted.
    """
    succ = g.successor
    order, periodic = _peel(succ)
    s = succ.tolist()
    size = g.size
    children: list[list[int]] = [[] for _ in range(size)]
    for v in order:
        children[s[v]].append(v)
    height = [0] * size
    for v in order:
        w = s[v]
        if height[v] + 1 > height[w]:
            height[w] = height[v] + 1
    nodes = order + np.flatnonzero(periodic).tolist()
    levels: dict[int, list[int]] = {}
    for v in nodes:
        levels.setdefault(height[v], []).append(v)
    label = [0] * size
    table: list[tuple[int, ...]] = []
    for h in sorted(levels):
        keys = {}
        for v in levels[h]:
            keys[v] = tuple(sorted(label[c] for c in children[v]))
        distinct = sorted(set(keys.values()))
        base = len(table)
        ids = {key: base + k for k, key in enumerate(distinct)}
        table.extend(distinct)
        for v, key in keys.items():
            label[v] = ids[key]
    comps = []
    for cyc in _cycles(succ, periodic):
        seq = [label[v] for v in cyc]
        r = _least_rotation(seq)
        comps.append(tuple(seq[r:] + seq[:r]))
    comps.sort()
    parts = [f"n={g.n}", "T"]
    parts.extend(",".join(map(str, key)) for key in table)
    parts.append("C")
    parts.extend(",".join(map(str, c)) for c in comps)
    return ";".join(parts).encode()


def isomorphic(g1: FunctionalGraph, g2: FunctionalGraph) -> bool:
    return g1.size == g2.size and canonical_form(g1) == canonical_form(g2)
