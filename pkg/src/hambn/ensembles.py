"""Seeded random state maps for the verification suites.

Any state map on ``2**n`` states is a Boolean network, so the ensembles
sample dynamics uniformly at the state level. Each instance draws from
``instance_rng(seed, n, index)``, which makes results independent of how
instances are split across workers.
"""

from __future__ import annotations

import numpy as np


def instance_rng(seed: int, n: int, index: int, stream: int = 0) -> np.random.Generator:
    return np.random.default_rng([seed, n, index, stream])


def uniform_map(n: int, rng: np.random.Generator) -> np.ndarray:
    size = 1 << n
    return rng.integers(0, size, size=size, dtype=np.int64)


def cycle_map(order) -> np.ndarray:
    order = np.asarray(order, dtype=np.int64)
    succ = np.empty_like(order)
    succ[order] = np.roll(order, -1)
    return succ


def cyclic_permutation(n: int, rng: np.random.Generator) -> np.ndarray:
    """Uniform single ``2**n``-cycle."""
    return cycle_map(rng.permutation(1 << n))


def rho_map(n: int, rng: np.random.Generator, cycle_length: int | None = None) -> np.ndarray:
    """Uniform Hamiltonian path whose last state points back ``cycle_length - 1`` steps.

    ``cycle_length = 1`` gives maximum height, ``2**n`` a Hamiltonian cycle.
    Drawn uniformly from ``1..2**n`` when omitted.
    """
    size = 1 << n
    if cycle_length is None:
        cycle_length = int(rng.integers(1, size + 1))
    order = rng.permutation(size)
    succ = np.empty(size, dtype=np.int64)
    succ[order[:-1]] = order[1:]
    succ[order[-1]] = order[size - cycle_length]
    return succ


def quasi_map(n: int, rng: np.random.Generator) -> np.ndarray:
    """A fixed point plus one ``2**n - 1`` cycle."""
    order = rng.permutation(1 << n)
    succ = np.empty(1 << n, dtype=np.int64)
    succ[order[0]] = order[0]
    rest = order[1:]
    succ[rest] = np.roll(rest, -1)
    return succ


def unique_garden_map(n: int, rng: np.random.Generator) -> np.ndarray:
    """Uniform map whose image misses exactly one state."""
    size = 1 << n
    garden = int(rng.integers(size))
    targets = np.delete(np.arange(size, dtype=np.int64), garden)
    extra = targets[rng.integers(size - 1)]
    values = np.append(targets, extra)
    return values[rng.permutation(size)]


def closed_subset_map(n: int, rng: np.random.Generator, mask: int, inner: np.ndarray) -> np.ndarray:
    """Random map whose coordinates in ``mask`` evolve by ``inner`` on their own.

    ``inner`` is a state map on the ``popcount(mask)`` variables of the set,
    listed in increasing index order. The other coordinates are uniform.
    """
    size = 1 << n
    members = [i for i in range(n) if (mask >> i) & 1]
    words = np.arange(size, dtype=np.int64)
    proj = np.zeros(size, dtype=np.int64)
    for pos, i in enumerate(members):
        proj |= ((words >> i) & 1) << pos
    image = inner[proj]
    lifted = np.zeros(size, dtype=np.int64)
    for pos, i in enumerate(members):
        lifted |= ((image >> pos) & 1) << i
    free = uniform_map(n, rng) & ~mask
    return lifted | free


def selfdual_cycle(n: int, mask: int, rng: np.random.Generator) -> np.ndarray:
    """Uniform Hamiltonian cycle with ``f^(2**(n-1))(x) = x xor mask`` (``mask`` non-zero).

    Half a cycle picks one state from each pair ``{x, x xor mask}`` in random
    order; the second half is its image under the flip.
    """
    size = 1 << n
    reps = np.arange(size, dtype=np.int64)
    reps = reps[reps < (reps ^ mask)]
    reps = rng.permutation(reps)
    flip = rng.integers(0, 2, size=reps.size).astype(bool)
    half = np.where(flip, reps ^ mask, reps)
    return cycle_map(np.concatenate([half, half ^ mask]))


def two_hamiltonian_map(n: int, rng: np.random.Generator) -> np.ndarray:
    """Random 2-Hamiltonian graph: two chains of ``2**(n-1)`` sources, last arcs anywhere."""
    size = 1 << n
    m = size // 2
    order = rng.permutation(size)
    succ = np.empty(size, dtype=np.int64)
    for chain in (order[:m], order[m:]):
        succ[chain[:-1]] = chain[1:]
        succ[chain[-1]] = order[int(rng.integers(size))]
    return succ


def fig11_lift(n: int) -> np.ndarray:
    """The 8-vertex example shape on ``2**n`` states.

    Chains ``a_0..a_{m-1}`` (states ``0..m-1``) and ``b_0..b_{m-1}``
    (states ``m..2m-1``); ``a_{m-1}`` points to ``b_{m-2}`` and ``b_{m-1}``
    to itself.
    """
    m = 1 << (n - 1)
    succ = np.empty(2 * m, dtype=np.int64)
    succ[: m - 1] = np.arange(1, m)
    succ[m : 2 * m - 1] = np.arange(m + 1, 2 * m)
    succ[m - 1] = m + max(m - 2, 0)
    succ[2 * m - 1] = 2 * m - 1
    return succ
