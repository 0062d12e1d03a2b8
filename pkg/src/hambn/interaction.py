"""Interaction graphs ``G(f)``, local graphs ``G_z(f)`` and their connectivity."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Union

import numpy as np

from .core import BooleanNetwork, Configuration, _word, states


class ArcSign(enum.Enum):
    POSITIVE = "+"
    NEGATIVE = "-"
    MIXED = "±"


class SignedDigraph:
    """Digraph on vertices ``1..n`` with one sign per arc ``(i, j)``."""

    __slots__ = ("n", "_arcs")

    def __init__(self, n: int, arcs: Iterable[tuple[int, int, ArcSign]] = ()):
        table: dict[tuple[int, int], ArcSign] = {}
        for i, j, sign in arcs:
            if not (1 <= i <= n and 1 <= j <= n):
                raise ValueError(f"arc ({i}, {j}) outside vertices 1..{n}")
            if (i, j) in table:
                raise ValueError(f"arc ({i}, {j}) listed twice")
            table[(i, j)] = ArcSign(sign)
        self.n = n
        self._arcs = dict(sorted(table.items()))

    @classmethod
    def from_pairs(cls, n: int, pairs: Iterable[tuple[int, int]], sign=ArcSign.POSITIVE):
        return cls(n, [(i, j, sign) for i, j in pairs])

    @classmethod
    def complete(cls, n: int) -> "SignedDigraph":
        """``K_n`` with loops (all signs positive)."""
        return cls.from_pairs(n, [(i, j) for i in range(1, n + 1) for j in range(1, n + 1)])

    @property
    def arcs(self) -> tuple[tuple[int, int, ArcSign], ...]:
        return tuple((i, j, s) for (i, j), s in self._arcs.items())

    def arc_set(self) -> frozenset[tuple[int, int]]:
        return frozenset(self._arcs)

    def sign(self, i: int, j: int) -> ArcSign | None:
        return self._arcs.get((i, j))

    def in_degree(self, j: int) -> int:
        return sum(1 for (_, b) in self._arcs if b == j)

    def in_neighbors(self, j: int) -> list[int]:
        return [a for (a, b) in self._arcs if b == j]

    def successors(self) -> list[list[int]]:
        """Adjacency lists indexed by vertex (index 0 unused)."""
        adj: list[list[int]] = [[] for _ in range(self.n + 1)]
        for i, j in self._arcs:
            adj[i].append(j)
        return adj

    def __eq__(self, other) -> bool:
        return isinstance(other, SignedDigraph) and self.n == other.n and self._arcs == other._arcs

    def __hash__(self) -> int:
        return hash((self.n, tuple(self._arcs.items())))

    def __repr__(self) -> str:
        body = ", ".join(f"{i}->{j}{s.value}" for (i, j), s in self._arcs.items())
        return f"SignedDigraph(n={self.n}, [{body}])"


def dependency_flags(f: BooleanNetwork) -> tuple[np.ndarray, np.ndarray]:
    """Boolean matrices ``inc[i-1, j-1]``, ``dec[i-1, j-1]``.

    ``inc`` marks some ``x`` with ``x_i = 0`` and ``f_j(x) < f_j(x ⊕ e_i)``;
    ``dec`` marks the opposite strict inequality.
    """
    n = f.n
    words = states(n)
    inc = np.zeros((n, n), dtype=bool)
    dec = np.zeros((n, n), dtype=bool)
    for i in range(n):
        low = words[((words >> i) & 1) == 0]
        high = low | (1 << i)
        for j, t in enumerate(f.locals):
            a = t.values[low]
            b = t.values[high]
            inc[i, j] = bool(np.any(a < b))
            dec[i, j] = bool(np.any(a > b))
    return inc, dec


def _sign(inc: bool, dec: bool) -> ArcSign:
    if inc and dec:
        return ArcSign.MIXED
    return ArcSign.POSITIVE if inc else ArcSign.NEGATIVE


def interaction_graph(f: BooleanNetwork) -> SignedDigraph:
    """``G(f)`` with signs; arcs violating unateness are marked MIXED."""
    inc, dec = dependency_flags(f)
    arcs = []
    for i in range(f.n):
        for j in range(f.n):
            if inc[i, j] or dec[i, j]:
                arcs.append((i + 1, j + 1, _sign(inc[i, j], dec[i, j])))
    return SignedDigraph(f.n, arcs)


def local_interaction_graph(f: BooleanNetwork, z: Union[Configuration, int]) -> SignedDigraph:
    """``G_z(f)``, signed by the orientation of the single witness pair at ``z``."""
    w = _word(z, f.n)
    arcs = []
    for i in range(f.n):
        flipped = w ^ (1 << i)
        low, high = (w, flipped) if not (w >> i) & 1 else (flipped, w)
        for j, t in enumerate(f.locals):
            a, b = int(t.values[low]), int(t.values[high])
            if a != b:
                arcs.append((i + 1, j + 1, ArcSign.POSITIVE if a < b else ArcSign.NEGATIVE))
    return SignedDigraph(f.n, arcs)


# connectivity ---------------------------------------------------------------


class Connectivity(enum.IntEnum):
    DISCONNECTED = 0
    CONNECTED_ONLY = 1
    UNILATERAL = 2
    STRONG = 3

    def __str__(self) -> str:
        return self.name.lower().replace("_", "-")


def strongly_connected_components(g: SignedDigraph) -> list[frozenset[int]]:
    """Tarjan's algorithm (iterative); components ordered by smallest vertex."""
    adj = g.successors()
    index: dict[int, int] = {}
    low: dict[int, int] = {}
    on_stack: set[int] = set()
    stack: list[int] = []
    comps: list[frozenset[int]] = []
    counter = 0
    for root in range(1, g.n + 1):
        if root in index:
            continue
        work = [(root, 0)]
        while work:
            v, k = work.pop()
            if k == 0:
                index[v] = low[v] = counter
                counter += 1
                stack.append(v)
                on_stack.add(v)
            recurse = False
            while k < len(adj[v]):
                w = adj[v][k]
                k += 1
                if w not in index:
                    work.append((v, k))
                    work.append((w, 0))
                    recurse = True
                    break
                if w in on_stack:
                    low[v] = min(low[v], index[w])
            if recurse:
                continue
            if low[v] == index[v]:
                comp = set()
                while True:
                    w = stack.pop()
                    on_stack.discard(w)
                    comp.add(w)
                    if w == v:
                        break
                comps.append(frozenset(comp))
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
    return sorted(comps, key=min)


@dataclass(frozen=True)
class ComponentGraph:
    components: tuple[frozenset[int], ...]
    arcs: frozenset[tuple[int, int]]  # indices into ``components``
    topological_order: tuple[int, ...]
    has_hamiltonian_path: bool
    is_transitive_tournament: bool


def component_graph(g: SignedDigraph) -> ComponentGraph:
    """Condensation of ``g`` plus path/tournament flags."""
    comps = strongly_connected_components(g)
    where = {v: k for k, comp in enumerate(comps) for v in comp}
    arcs = {(where[i], where[j]) for (i, j) in g.arc_set() if where[i] != where[j]}
    # Kahn with smallest-index tie break keeps the order deterministic
    indeg = [0] * len(comps)
    out: list[list[int]] = [[] for _ in comps]
    for a, b in arcs:
        indeg[b] += 1
        out[a].append(b)
    ready = sorted(k for k in range(len(comps)) if indeg[k] == 0)
    order = []
    while ready:
        a = ready.pop(0)
        order.append(a)
        for b in out[a]:
            indeg[b] -= 1
            if indeg[b] == 0:
                ready.append(b)
        ready.sort()
    ham = all((order[k], order[k + 1]) in arcs for k in range(len(order) - 1))
    tournament = ham and all(
        (order[a], order[b]) in arcs for a in range(len(order)) for b in range(a + 1, len(order))
    )
    return ComponentGraph(tuple(comps), frozenset(arcs), tuple(order), ham, tournament)


def _weakly_connected(g: SignedDigraph) -> bool:
    if g.n == 0:
        return True
    adj: list[set[int]] = [set() for _ in range(g.n + 1)]
    for i, j in g.arc_set():
        adj[i].add(j)
        adj[j].add(i)
    seen = {1}
    todo = [1]
    while todo:
        v = todo.pop()
        for w in adj[v] - seen:
            seen.add(w)
            todo.append(w)
    return len(seen) == g.n


def connectivity(g: SignedDigraph) -> Connectivity:
    """Strongest applicable connectivity level."""
    cg = component_graph(g)
    if len(cg.components) == 1:
        return Connectivity.STRONG
    if cg.has_hamiltonian_path:
        return Connectivity.UNILATERAL
    if _weakly_connected(g):
        return Connectivity.CONNECTED_ONLY
    return Connectivity.DISCONNECTED
