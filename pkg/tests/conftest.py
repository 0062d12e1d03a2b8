"""Brute-force oracles shared by the test modules.

These are deliberately naive re-statements of the definitions, written
without the library's vectorized helpers.
"""

import itertools

import numpy as np
import pytest

from hambn import BooleanNetwork


def bits(word, n):
    return [(word >> i) & 1 for i in range(n)]


def word(bs):
    return sum(b << i for i, b in enumerate(bs))


def brute_successor(local_fns, n):
    """State map from a list of Python callables over the bit list (x1 first)."""
    return [word([int(bool(fn(bits(x, n)))) for fn in local_fns]) for x in range(1 << n)]


def brute_isomorphic(s1, s2):
    """Search every relabeling; only for tiny state spaces."""
    size = len(s1)
    if size != len(s2):
        return False
    if sorted(np.bincount(s1, minlength=size)) != sorted(np.bincount(s2, minlength=size)):
        return False
    for perm in itertools.permutations(range(size)):
        if all(perm[s1[v]] == s2[perm[v]] for v in range(size)):
            return True
    return False


def brute_unate(succ, n):
    """Per-(i, j) sign from the definition; None if some f_j is binate in x_i."""
    signs = {}
    for i in range(n):
        for j in range(n):
            up = down = False
            for x in range(1 << n):
                if (x >> i) & 1:
                    continue
                a, b = (succ[x] >> j) & 1, (succ[x | (1 << i)] >> j) & 1
                up |= a < b
                down |= a > b
            if up and down:
                return None
            if up or down:
                signs[(i + 1, j + 1)] = "+" if up else "-"
    return signs


def brute_cycle_length(succ, start):
    seen = {}
    v, t = start, 0
    while v not in seen:
        seen[v] = t
        v, t = succ[v], t + 1
    return t - seen[v]


def brute_threshold(values, n, span=4):
    """Search integer weights in ``-span..span`` and thresholds in a matching box."""
    pts = [bits(x, n) for x in range(1 << n)]
    for a in itertools.product(range(-span, span + 1), repeat=n):
        sums = [sum(ai * xi for ai, xi in zip(a, p)) for p in pts]
        for b in range(-span * n, span * n + 2):
            if all((s >= b) == bool(v) for s, v in zip(sums, values)):
                return a, b
    return None


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


def random_network(n, rng):
    return BooleanNetwork.from_map(rng.integers(0, 1 << n, size=1 << n))


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if not lines:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(lines):
        terminalreporter.write_line(lines[k])
