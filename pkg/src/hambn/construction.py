"""The unate Hamiltonian-cycle family ``f^[n]``, its variants and realizations.

``f^[1] = (not x1)``. For ``n >= 1`` the auxiliary network is
``h^[n+1](x) = (f^[n](x_1..x_n), x_{n+1})`` and ``f^[n+1]`` agrees with it
except at the anchor ``z = z^[n+1]`` (sent to all-ones) and at its
complement (sent to all-zeros). All ``n + 1`` coordinates are patched.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Union

import numpy as np

from .core import BooleanNetwork, Configuration, TruthTable, _check_n, states
from .dynamics import FunctionalGraph, isomorphic, two_hamiltonian_witness


def oscillating(k: int, first_bit: int) -> Configuration:
    """``t_k``: ``k`` alternating bits starting with ``first_bit``."""
    if k < 1:
        raise ValueError("k must be at least 1")
    return Configuration.from_bits([(first_bit + i) & 1 for i in range(k)])


def _anchor_word(n: int) -> int:
    # bit i (1-based) is set iff n - i is odd; n = 1 gives the word 0
    return sum(1 << (i - 1) for i in range(1, n + 1) if (n - i) % 2 == 1)


def z_config(n: int) -> Configuration:
    """``z^[n]`` for ``n >= 2``: ``z^[2] = 10`` and ``z^[n+1] = (not z^[n], 0)``."""
    if n < 2:
        raise ValueError("z^[n] is defined for n >= 2")
    return Configuration(_anchor_word(n), n)


def k_of(x: Configuration) -> int:
    """Length of the longest alternating prefix of ``x`` (at least 1)."""
    k = 1
    while k < x.n and x[k + 1] != x[k]:
        k += 1
    return k


class ClauseKind(enum.Enum):
    CONJUNCTIVE = "conjunctive"
    DISJUNCTIVE = "disjunctive"


@dataclass(frozen=True)
class Clause:
    """``c_z`` (1 exactly on agreement with ``anchor`` on ``x_1..x_width``) or ``d_z`` (0 there)."""

    kind: ClauseKind
    anchor: Configuration
    width: int

    def __post_init__(self):
        if not 1 <= self.width <= self.anchor.n:
            raise ValueError("clause width must lie in 1..n")

    def table(self, n: int) -> TruthTable:
        mask = (1 << self.width) - 1
        agree = (states(n) & mask) == (self.anchor.bits & mask)
        values = agree if self.kind is ClauseKind.CONJUNCTIVE else ~agree
        return TruthTable(n, values.astype(np.uint8))

    def __call__(self, x: Configuration) -> int:
        mask = (1 << self.width) - 1
        agree = (x.bits & mask) == (self.anchor.bits & mask)
        return int(agree if self.kind is ClauseKind.CONJUNCTIVE else not agree)


class Variant(enum.Enum):
    F = "f"
    H = "h"
    H_OR_C = "h-or-c"
    H_AND_D = "h-and-d"


@dataclass(frozen=True)
class FamilyMember:
    n: int
    network: BooleanNetwork
    anchor_z: Configuration
    variant: Variant


def family_successor(n: int) -> np.ndarray:
    """State map of ``f^[n]`` (writable copy)."""
    _check_n(n)
    succ = np.array([1, 0], dtype=np.int64)
    for m in range(1, n):
        size = 1 << m
        succ = np.concatenate([succ, succ + size])
        z = _anchor_word(m + 1)
        full = (size << 1) - 1
        succ[z] = full
        succ[full ^ z] = 0
    return succ


def _auxiliary_successor(n: int) -> np.ndarray:
    low = family_successor(n - 1)
    return np.concatenate([low, low + (1 << (n - 1))])


def build_family(n: int, variant: Union[Variant, str] = Variant.F) -> FamilyMember:
    variant = Variant(variant)
    _check_n(n)
    if variant is not Variant.F and n < 2:
        raise ValueError(f"variant {variant.value} needs n >= 2")
    z = _anchor_word(n)
    full = (1 << n) - 1
    if variant is Variant.F:
        succ = family_successor(n)
    else:
        succ = _auxiliary_successor(n)
        if variant is Variant.H_OR_C:
            succ[z] = full
        elif variant is Variant.H_AND_D:
            succ[full ^ z] = 0
    return FamilyMember(n, BooleanNetwork.from_map(succ), Configuration(z, n), variant)


def realize_hamiltonian(n: int, p: int) -> BooleanNetwork:
    """Unate network with a single attractor of length ``p`` and height ``2**n - p``.

    ``f^[n]`` with the anchor redirected to ``f^[n]^(2**n - p)(all-ones)``.
    """
    _check_n(n)
    size = 1 << n
    if not 1 <= p <= size:
        raise ValueError(f"period must lie in 1..{size}")
    succ = family_successor(n)
    u = size - 1
    for _ in range(size - p):
        u = int(succ[u])
    succ[_anchor_word(n)] = u
    return BooleanNetwork.from_map(succ)


class UnrealizableError(ValueError):
    pass


def _redirect(n: int, u: int, v: int) -> np.ndarray:
    succ = family_successor(n)
    z = _anchor_word(n)
    succ[z] = u
    succ[((1 << n) - 1) ^ z] = v
    return succ


def _family_cycle(n: int) -> list[int]:
    """States of ``f^[n]`` from all-ones; the anchor is last, all-zeros sits at ``2**(n-1)``."""
    succ = family_successor(n).tolist()
    out = [(1 << n) - 1]
    for _ in range((1 << n) - 1):
        out.append(succ[out[-1]])
    return out


def _two_chains(target: FunctionalGraph, u: int, v: int) -> tuple[list[int], list[int]]:
    m = target.size // 2
    s = target.successor.tolist()
    chains = []
    for start in (u, v):
        chain = [start]
        for _ in range(m - 1):
            chain.append(s[chain[-1]])
        chains.append(chain)
    return chains[0], chains[1]


def two_hamiltonian_redirection(target: FunctionalGraph) -> tuple[int, int]:
    """``(u, v)`` such that ``f^[n]`` with ``z -> u`` and ``not z -> v`` realizes ``target``.

    A 2-Hamiltonian functional graph is two chains of ``2**(n-1)`` distinct
    arc sources each, whose last vertices point anywhere. ``f^[n]`` splits the
    same way at the anchor and its complement (self-duality puts all-zeros
    half way round the cycle from all-ones), so matching chain to chain
    fixes ``(u, v)`` directly. Both orientations are tried, each confirmed by
    canonical forms, before a brute-force sweep over all pairs.
    """
    witness = two_hamiltonian_witness(target)
    if witness is None:
        raise UnrealizableError("target is not 2-Hamiltonian")
    n = target.n
    m = target.size // 2
    cyc = _family_cycle(n)
    s = target.successor.tolist()
    a, b = witness
    for first, second in ((a, b), (b, a)):
        pa, qb = _two_chains(target, first, second)
        image = {}
        for i in range(m):
            image[pa[i]] = cyc[i]
            image[qb[i]] = cyc[m + i]
        v = image[s[pa[-1]]]
        u = image[s[qb[-1]]]
        if isomorphic(FunctionalGraph(_redirect(n, u, v), n), target):
            return u, v
    for u in range(target.size):
        for v in range(target.size):
            if isomorphic(FunctionalGraph(_redirect(n, u, v), n), target):
                return u, v
    raise UnrealizableError("no redirection (u, v) of f^[n] realizes the target")


def realize_two_hamiltonian(target: FunctionalGraph) -> BooleanNetwork:
    """Unate network whose dynamics is isomorphic to a 2-Hamiltonian ``target``."""
    u, v = two_hamiltonian_redirection(target)
    return BooleanNetwork.from_map(_redirect(target.n, u, v))


def table1_predicate(n: int, i: int, j: int) -> bool:
    """Cell of the reference dependency table at the anchor, taken verbatim.

    For ``n`` even: ``i > j`` is true iff ``i`` is even, ``i = j`` iff ``i``
    is odd, ``i < j`` iff ``j`` is even; every cell flips for ``n`` odd.
    """
    if n < 3 or not (1 <= i <= n and 1 <= j <= n):
        raise ValueError("need n >= 3 and 1 <= i, j <= n")
    key = i if i >= j else j
    cell = key % 2 == 0
    if i == j:
        cell = not cell
    if n % 2 == 1:
        cell = not cell
    return cell


def dependency_at(f: BooleanNetwork, z: int) -> np.ndarray:
    """``D[i-1, j-1] = [f_j(z) != f_j(z xor e_i)]``."""
    succ = f.successor
    out = np.zeros((f.n, f.n), dtype=bool)
    for i in range(f.n):
        diff = int(succ[z]) ^ int(succ[z ^ (1 << i)])
        out[i] = [(diff >> j) & 1 for j in range(f.n)]
    return out


# fixtures --------------------------------------------------------------------

_FIXTURES = {
    # f2 with only three terms has 4 true points and breaks the intended
    # transition 110 -> 010 (needs f2(110) = 1); the fourth term restores it
    "ex1": """n=3
f1 = x1 & !x2 & !x3 | x1 & x2 & x3
f2 = x1 & x3 | !x2 & x3 | x1 & !x2 | x1 & x2 & !x3
f3 = x3
""",
    "ex1-literal": """n=3
f1 = x1 & !x2 & !x3 | x1 & x2 & x3
f2 = x1 & x3 | !x2 & x3 | x1 & !x2
f3 = x3
""",
    "ex2": """n=3
f1 = x3
f2 = !x1 | x1 & x2 & !x3
f3 = x2 & x3 | !x2 & !x3
""",
    "ex3": """n=3
f1 = !x1
f2 = !x2 & x3 | !x1 & x3 | x1 & x2
f3 = !x2
""",
    "ex4": """n=3
f1 = !x1
f2 = !x2 & x3 | !x1 & x3 | x1 & x2 & !x3
f3 = !x2
""",
    "quasi3": """n=3
f1 = x2 & !x3 | !x2 & x3
f2 = x3
f3 = x1
""",
    "f2": """n=2
f1 = !x2
f2 = x1
""",
    "f3": """n=3
f1 = !x1 & !x2 | !x2 & !x3 | !x1 & !x3
f2 = x1 & x2 | x1 & !x3 | x2 & !x3
f3 = !x1 & x3 | x2 & x3 | !x1 & x2
""",
    "bridoux5": """n=5
f1 = !x2 & !x3 | !x4 & x5 | !x3 & x4 & !x5
f2 = !x1 & !x3 | x1 & x3 & x4 | !x1 & !x4 & x5 | !x1 & x4 & !x5 | x3 & x4 & !x5
f3 = !x1 & !x2 & x4 | x1 & x2 & x5 | !x1 & !x2 & x5 | x1 & !x2 & !x5 | !x2 & x4 & !x5 | !x1 & x2 & !x4 & !x5
f4 = !x1 & x2 & x3 | x1 & !x2 & x3 | !x1 & x2 & !x5 | x1 & !x2 & !x5 | x1 & !x3 & !x5 | x2 & !x3 & !x5 | !x1 & !x2 & !x3 & x5
f5 = x2 & x3 | x1 & x2 & x4 | !x1 & x2 & !x4 | x1 & !x3 & x4 | !x2 & !x3 & x4
""",
}

#: Tables of the five-variable fixture, frozen from the formulas above.
BRIDOUX5_GOLDEN = ("03ff0f03", "a555f505", "99993366", "61616e6e", "cbc4cbc4")

FIXTURE_IDS = tuple(_FIXTURES)


def fixture_source(name: str) -> str:
    """``.bn`` text of a fixture (expression form, as transcribed)."""
    try:
        return _FIXTURES[name]
    except KeyError:
        raise KeyError(f"unknown fixture {name!r}; choose from {', '.join(FIXTURE_IDS)}") from None


def paper_fixture(name: str) -> BooleanNetwork:
    from .formats import load_network

    return load_network(fixture_source(name))


def fig11_graph() -> FunctionalGraph:
    """The eight-vertex 2-Hamiltonian digraph with vertex ``k`` stored as state ``k - 1``."""
    arcs = {1: 2, 2: 4, 3: 3, 4: 6, 5: 3, 6: 5, 7: 5, 8: 7}
    return FunctionalGraph([arcs[k + 1] - 1 for k in range(8)], 3)
