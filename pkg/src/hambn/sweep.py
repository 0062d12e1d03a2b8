"""Compiled per-map checks for exhaustive and sampled sweeps.

Every state map on ``2**n`` states is a Boolean network, so the sweeps work
on successor arrays directly. :func:`inspect_map` evaluates one map and the
drivers accumulate tallies. The checks mirror the library's definitions
(interaction graph, attractors, height, classification) but are written
independently on bitmasks; tests cross-check the two on random maps.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numba
import numpy as np

# check slots in the tally vector
ODD_INDEGREE = 0
UNIQUE_GARDEN = 1
SUBNETWORK_CYCLE = 2
HAMILTONIAN_UNILATERAL = 3
STRONG = 4
PERIOD_HEIGHT = 5
TOURNAMENT = 6
N_CHECKS = 7

CHECK_NAMES = (
    "odd-indegree",
    "unique-garden",
    "subnetwork-cycle",
    "hamiltonian-unilateral",
    "strong-connectivity",
    "period-height-sum",
    "conjecture-tournament",
)

# classification codes returned by inspect_map
C_MAX_HEIGHT, C_INTERMEDIATE, C_CYCLE, C_QUASI, C_NOT = 0, 1, 2, 3, 4
CLASS_NAMES = ("max-height", "intermediate", "hamiltonian-cycle", "quasi-hamiltonian", "not-hamiltonian")

# info vector layout
I_CLASS, I_HEIGHT, I_PERIOD, I_GARDENS, I_CONN, I_ADJ0 = 0, 1, 2, 3, 4, 5


@numba.njit(cache=True)
def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


@numba.njit(cache=True)
def _compress(x, mask, n):
    out = 0
    pos = 0
    for i in range(n):
        if (mask >> i) & 1:
            out |= ((x >> i) & 1) << pos
            pos += 1
    return out


@numba.njit(cache=True)
def _expand(y, mask, n):
    out = 0
    pos = 0
    for i in range(n):
        if (mask >> i) & 1:
            out |= ((y >> pos) & 1) << i
            pos += 1
    return out


@numba.njit(cache=True)
def inspect_map(succ, n, applicable, violated, info):
    """Evaluate every check on one state map.

    ``applicable[c]`` / ``violated[c]`` are set to 1 when check ``c`` applies
    to the map / fails on it. ``info`` receives classification code, height,
    period, number of gardens, connectivity level (0..3) and the adjacency
    bitmask of each vertex (row ``i`` holds the targets ``j`` of ``i -> j``).
    """
    size = 1 << n
    full = size - 1
    vfull = (1 << n) - 1
    for c in range(N_CHECKS):
        applicable[c] = 0
        violated[c] = 0

    # interaction graph: adj[i] has bit j iff f_j depends on x_i
    adj = np.zeros(n, dtype=np.int64)
    for i in range(n):
        acc = 0
        for v in range(size):
            acc |= succ[v] ^ succ[v ^ (1 << i)]
        adj[i] = acc
    indeg = np.zeros(n, dtype=np.int64)
    for j in range(n):
        for i in range(n):
            indeg[j] += (adj[i] >> j) & 1
    any_full = False
    for j in range(n):
        if indeg[j] == n:
            any_full = True

    # lemma: odd number of true points forces full in-degree
    applicable[ODD_INDEGREE] = 1
    for j in range(n):
        ones = 0
        for v in range(size):
            ones += (succ[v] >> j) & 1
        if ones % 2 == 1 and indeg[j] != n:
            violated[ODD_INDEGREE] = 1

    # dynamics
    pre = np.zeros(size, dtype=np.int64)
    for v in range(size):
        pre[succ[v]] += 1
    gardens = 0
    for v in range(size):
        if pre[v] == 0:
            gardens += 1
    periodic = np.zeros(size, dtype=np.uint8)
    for v in range(size):
        w = v
        for _ in range(size):
            w = succ[w]
        # w is periodic; v is periodic iff it lies on w's cycle
        u = w
        while True:
            if u == v:
                periodic[v] = 1
                break
            u = succ[u]
            if u == w:
                break
    cyclen = np.zeros(size, dtype=np.int64)
    n_attr = 0
    period = 1
    max_len = 0
    for v in range(size):
        if periodic[v] and cyclen[v] == 0:
            length = 1
            u = succ[v]
            while u != v:
                length += 1
                u = succ[u]
            u = v
            for _ in range(length):
                cyclen[u] = length
                u = succ[u]
            n_attr += 1
            period = period // _gcd(period, length) * length
            if length > max_len:
                max_len = length
    depth = np.zeros(size, dtype=np.int64)
    height = 0
    longest = 0
    for v in range(size):
        d = 0
        u = v
        while not periodic[u]:
            u = succ[u]
            d += 1
        depth[v] = d
        if d > height:
            height = d
        # walks may not revisit a vertex, except a cycle closing on its start
        run = cyclen[u] if d == 0 else d + cyclen[u] - 1
        if run > longest:
            longest = run

    cls = C_NOT
    if n_attr == 1:
        if max_len == size:
            cls = C_CYCLE
        elif height == size - max_len:
            cls = C_MAX_HEIGHT if max_len == 1 else C_INTERMEDIATE
    elif n_attr == 2 and size - 1 >= 2:
        fixed = 0
        for v in range(size):
            if periodic[v] and cyclen[v] == 1:
                fixed += 1
        if fixed == 1 and max_len == size - 1:
            cls = C_QUASI

    # reachability closure including the vertex itself
    reach = np.zeros(n, dtype=np.int64)
    for i in range(n):
        reach[i] = adj[i] | (1 << i)
    for k in range(n):
        for i in range(n):
            if (reach[i] >> k) & 1:
                reach[i] |= reach[k]
    strong = True
    unilateral = True
    for i in range(n):
        if reach[i] != vfull:
            strong = False
        for j in range(n):
            if not ((reach[i] >> j) & 1) and not ((reach[j] >> i) & 1):
                unilateral = False
    weak = True
    if not unilateral:
        und = np.zeros(n, dtype=np.int64)
        for i in range(n):
            und[i] |= adj[i] | (1 << i)
            for j in range(n):
                if (adj[i] >> j) & 1:
                    und[j] |= 1 << i
        for k in range(n):
            for i in range(n):
                if (und[i] >> k) & 1:
                    und[i] |= und[k]
        weak = und[0] == vfull
    conn = 3 if strong else (2 if unilateral else (1 if weak else 0))

    hamiltonian = cls == C_MAX_HEIGHT or cls == C_INTERMEDIATE or cls == C_CYCLE
    if gardens == 1:
        applicable[UNIQUE_GARDEN] = 1
        if not any_full:
            violated[UNIQUE_GARDEN] = 1
    if hamiltonian or cls == C_QUASI:
        applicable[HAMILTONIAN_UNILATERAL] = 1
        if not unilateral:
            violated[HAMILTONIAN_UNILATERAL] = 1
    if cls == C_MAX_HEIGHT or cls == C_QUASI or (cls == C_INTERMEDIATE and period % 2 == 1):
        applicable[STRONG] = 1
        if not strong:
            violated[STRONG] = 1
    if hamiltonian:
        applicable[PERIOD_HEIGHT] = 1
        if period + height != size:
            violated[PERIOD_HEIGHT] = 1
    if (cls == C_CYCLE or cls == C_INTERMEDIATE) and unilateral:
        # components are totally ordered; every earlier/later pair needs a direct arc
        applicable[TOURNAMENT] = 1
        for i in range(n):
            for j in range(n):
                if (reach[i] >> j) & 1 and not ((reach[j] >> i) & 1):
                    ci = 0
                    cj = 0
                    for k in range(n):
                        if (reach[i] >> k) & 1 and (reach[k] >> i) & 1:
                            ci |= 1 << k
                        if (reach[j] >> k) & 1 and (reach[k] >> j) & 1:
                            cj |= 1 << k
                    direct = False
                    for a in range(n):
                        if (ci >> a) & 1 and adj[a] & cj:
                            direct = True
                    if not direct:
                        violated[TOURNAMENT] = 1

    # closed proper index sets and the long-trajectory lemma
    for mask in range(1, vfull):
        closed = True
        for i in range(n):
            if not (mask >> i) & 1 and adj[i] & mask:
                closed = False
        if not closed:
            continue
        k = 0
        for i in range(n):
            k += (mask >> i) & 1
        if longest <= size - (1 << (n - k)):
            continue
        applicable[SUBNETWORK_CYCLE] = 1
        sub = 1 << k
        y = 0
        steps = 0
        while True:
            y = _compress(succ[_expand(y, mask, n)], mask, n)
            steps += 1
            if y == 0 or steps > sub:
                break
        if steps != sub:
            violated[SUBNETWORK_CYCLE] = 1

    info[I_CLASS] = cls
    info[I_HEIGHT] = height
    info[I_PERIOD] = period
    info[I_GARDENS] = gardens
    info[I_CONN] = conn
    for i in range(n):
        info[I_ADJ0 + i] = adj[i]


@numba.njit(cache=True)
def _exhaustive3(start, stop, tallies, classes, first_bad):
    n = 3
    succ = np.zeros(8, dtype=np.int64)
    applicable = np.zeros(N_CHECKS, dtype=np.int64)
    violated = np.zeros(N_CHECKS, dtype=np.int64)
    info = np.zeros(I_ADJ0 + n, dtype=np.int64)
    for code in range(start, stop):
        for s in range(8):
            succ[s] = (code >> (3 * s)) & 7
        inspect_map(succ, n, applicable, violated, info)
        classes[info[I_CLASS]] += 1
        for c in range(N_CHECKS):
            tallies[c, 0] += applicable[c]
            if violated[c]:
                tallies[c, 1] += 1
                if first_bad[c] < 0:
                    first_bad[c] = code


@dataclass
class SweepResult:
    n: int
    instances: int
    applicable: dict = field(default_factory=dict)
    violations: dict = field(default_factory=dict)
    # first violating map per check, as a successor list
    witnesses: dict = field(default_factory=dict)
    classes: dict = field(default_factory=dict)


def decode3(code: int) -> list[int]:
    return [(code >> (3 * s)) & 7 for s in range(8)]


def exhaustive_n3(start: int = 0, stop: int = 1 << 24) -> SweepResult:
    """Run every check on the maps with codes ``start..stop-1`` (state ``s`` goes to bits ``3s..3s+2``)."""
    tallies = np.zeros((N_CHECKS, 2), dtype=np.int64)
    classes = np.zeros(5, dtype=np.int64)
    first_bad = np.full(N_CHECKS, -1, dtype=np.int64)
    _exhaustive3(start, stop, tallies, classes, first_bad)
    return _result(3, stop - start, tallies, classes, {c: decode3(int(first_bad[c])) for c in range(N_CHECKS) if first_bad[c] >= 0})


def _result(n, instances, tallies, classes, witnesses) -> SweepResult:
    return SweepResult(
        n=n,
        instances=int(instances),
        applicable={CHECK_NAMES[c]: int(tallies[c, 0]) for c in range(N_CHECKS)},
        violations={CHECK_NAMES[c]: int(tallies[c, 1]) for c in range(N_CHECKS)},
        witnesses={CHECK_NAMES[c]: w for c, w in witnesses.items()},
        classes={CLASS_NAMES[k]: int(classes[k]) for k in range(5)},
    )


def merge(results: list[SweepResult]) -> SweepResult:
    out = SweepResult(results[0].n, 0)
    for r in results:
        out.instances += r.instances
        for key in CHECK_NAMES:
            out.applicable[key] = out.applicable.get(key, 0) + r.applicable[key]
            out.violations[key] = out.violations.get(key, 0) + r.violations[key]
            if key in r.witnesses and key not in out.witnesses:
                out.witnesses[key] = r.witnesses[key]
        for key, v in r.classes.items():
            out.classes[key] = out.classes.get(key, 0) + v
    return out


def inspect_maps(maps: np.ndarray, n: int) -> SweepResult:
    """Run every check on each row of ``maps`` (shape ``(count, 2**n)``)."""
    if n > 6:
        raise ValueError("compiled checks support n <= 6")
    tallies = np.zeros((N_CHECKS, 2), dtype=np.int64)
    classes = np.zeros(5, dtype=np.int64)
    first_bad = np.full(N_CHECKS, -1, dtype=np.int64)
    _inspect_rows(np.ascontiguousarray(maps, dtype=np.int64), n, tallies, classes, first_bad)
    witnesses = {c: maps[int(first_bad[c])].tolist() for c in range(N_CHECKS) if first_bad[c] >= 0}
    return _result(n, len(maps), tallies, classes, witnesses)


@numba.njit(cache=True)
def _inspect_rows(maps, n, tallies, classes, first_bad):
    applicable = np.zeros(N_CHECKS, dtype=np.int64)
    violated = np.zeros(N_CHECKS, dtype=np.int64)
    info = np.zeros(I_ADJ0 + n, dtype=np.int64)
    for r in range(maps.shape[0]):
        inspect_map(maps[r], n, applicable, violated, info)
        classes[info[I_CLASS]] += 1
        for c in range(N_CHECKS):
            tallies[c, 0] += applicable[c]
            if violated[c]:
                tallies[c, 1] += 1
                if first_bad[c] < 0:
                    first_bad[c] = r


def inspect_one(succ, n: int):
    """``(applicable, violated, info)`` arrays for a single map."""
    applicable = np.zeros(N_CHECKS, dtype=np.int64)
    violated = np.zeros(N_CHECKS, dtype=np.int64)
    info = np.zeros(I_ADJ0 + n, dtype=np.int64)
    inspect_map(np.asarray(succ, dtype=np.int64), n, applicable, violated, info)
    return applicable, violated, info


@numba.njit(cache=True)
def _binate_score(succ, n):
    """Sum over arcs of ``min(#increasing, #decreasing)`` witnesses; 0 iff unate."""
    size = 1 << n
    total = 0
    for i in range(n):
        for j in range(n):
            inc = 0
            dec = 0
            for v in range(size):
                if (v >> i) & 1:
                    continue
                a = (succ[v] >> j) & 1
                b = (succ[v | (1 << i)] >> j) & 1
                if a < b:
                    inc += 1
                elif a > b:
                    dec += 1
            total += min(inc, dec)
    return total


@numba.njit(cache=True)
def _order_to_succ(order, succ):
    size = order.shape[0]
    for k in range(size):
        succ[order[k]] = order[(k + 1) % size]


@numba.njit(cache=True)
def anneal_unate_cycles(n, seed, restarts, steps, t0, found, max_found):
    """Simulated annealing over cyclic orders towards unate Hamiltonian cycles.

    Writes distinct zero-score successor maps into rows of ``found`` (up to
    ``max_found``) and returns how many were stored. A 2-opt segment reversal
    or a swap of two states is proposed at each step.
    """
    np.random.seed(seed)
    size = 1 << n
    order = np.arange(size)
    succ = np.zeros(size, dtype=np.int64)
    trial = np.zeros(size, dtype=np.int64)
    count = 0
    for _ in range(restarts):
        for k in range(size - 1, 0, -1):
            r = np.random.randint(0, k + 1)
            order[k], order[r] = order[r], order[k]
        _order_to_succ(order, succ)
        score = _binate_score(succ, n)
        for step in range(steps):
            temp = t0 * (1.0 - step / steps) + 1e-3
            a = np.random.randint(1, size)
            b = np.random.randint(1, size)
            if a == b:
                continue
            if a > b:
                a, b = b, a
            swap = np.random.random() < 0.5
            if swap:
                order[a], order[b] = order[b], order[a]
            else:
                order[a : b + 1] = order[a : b + 1][::-1].copy()
            _order_to_succ(order, trial)
            s = _binate_score(trial, n)
            if s <= score or np.random.random() < np.exp((score - s) / temp):
                score = s
                succ[:] = trial
            else:
                if swap:
                    order[a], order[b] = order[b], order[a]
                else:
                    order[a : b + 1] = order[a : b + 1][::-1].copy()
            if score == 0:
                new = True
                for r in range(count):
                    same = True
                    for v in range(size):
                        if found[r, v] != succ[v]:
                            same = False
                            break
                    if same:
                        new = False
                        break
                if new and count < max_found:
                    found[count, :] = succ
                    count += 1
                break
    return count


@numba.njit(cache=True)
def _heights(maps, n, out):
    size = 1 << n
    indeg = np.zeros(size, dtype=np.int64)
    depth = np.zeros(size, dtype=np.int64)
    stack = np.zeros(size, dtype=np.int64)
    for r in range(maps.shape[0]):
        succ = maps[r]
        indeg[:] = 0
        depth[:] = 0
        for v in range(size):
            indeg[succ[v]] += 1
        top = 0
        for v in range(size):
            if indeg[v] == 0:
                stack[top] = v
                top += 1
        # leaf-first peeling; depth counts layers above the periodic set
        order = np.zeros(size, dtype=np.int64)
        count = 0
        while top > 0:
            top -= 1
            v = stack[top]
            order[count] = v
            count += 1
            w = succ[v]
            indeg[w] -= 1
            if indeg[w] == 0:
                stack[top] = w
                top += 1
        best = 0
        for k in range(count - 1, -1, -1):
            v = order[k]
            w = succ[v]
            d = depth[w] + 1
            depth[v] = d
            if d > best:
                best = d
        out[r] = best


def heights(maps: np.ndarray, n: int) -> np.ndarray:
    """Height of every row of ``maps`` (longest transient path into a cycle)."""
    maps = np.ascontiguousarray(maps, dtype=np.int64)
    out = np.zeros(maps.shape[0], dtype=np.int64)
    _heights(maps, n, out)
    return out
