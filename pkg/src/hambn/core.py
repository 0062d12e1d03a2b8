"""Configurations, truth tables and Boolean networks.

Bit convention used everywhere in the package: variable ``x_i`` (1-based)
lives in bit ``i - 1`` of a configuration word, so ``x_1`` is the least
significant bit and the truth-table index of a configuration *is* its word.
String renderings list ``x_1`` first, e.g. ``"100"`` is ``x_1 = 1`` (word 1).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence, Union

import numpy as np

#: Default cap on the number of variables; a table per local function is
#: 2**n bytes, so 20 keeps every network desk-sized. Reassign to change it.
MAX_VARIABLES = 20


class DimensionError(ValueError):
    """Configuration or index does not fit the network it is used with."""


class SubnetworkError(ValueError):
    """Projection onto an index set is not a well-defined subnetwork.

    ``pair`` is ``(i, j)``: local function ``f_j`` (``j`` inside the set)
    depends on variable ``x_i`` outside it.
    """

    def __init__(self, message: str, pair: tuple[int, int] | None = None):
        super().__init__(message)
        self.pair = pair


def _check_n(n: int) -> None:
    if not 1 <= n <= MAX_VARIABLES:
        raise DimensionError(f"n must be in 1..{MAX_VARIABLES}, got {n}")


def states(n: int) -> np.ndarray:
    """All configuration words of ``n`` variables, in table order."""
    return np.arange(1 << n, dtype=np.int64)


def bit_column(n: int, i: int) -> np.ndarray:
    """Value of ``x_i`` on every configuration (0/1 ``uint8`` array)."""
    return ((states(n) >> (i - 1)) & 1).astype(np.uint8)


@dataclass(frozen=True)
class Configuration:
    """An ``n``-bit state; ``bits`` is the configuration word."""

    bits: int
    n: int

    def __post_init__(self):
        _check_n(self.n)
        if not 0 <= self.bits < (1 << self.n):
            raise DimensionError(f"word {self.bits} does not fit in {self.n} bits")

    @classmethod
    def parse(cls, text: str) -> "Configuration":
        """Read a bit string written ``x_1 x_2 ... x_n`` (left to right)."""
        text = text.strip()
        if not text or set(text) - {"0", "1"}:
            raise ValueError(f"not a bit string: {text!r}")
        return cls(sum(1 << k for k, ch in enumerate(text) if ch == "1"), len(text))

    @classmethod
    def from_bits(cls, values: Sequence[int]) -> "Configuration":
        """Build from ``(x_1, ..., x_n)``."""
        return cls(sum((int(v) & 1) << k for k, v in enumerate(values)), len(values))

    @classmethod
    def zeros(cls, n: int) -> "Configuration":
        return cls(0, n)

    @classmethod
    def ones(cls, n: int) -> "Configuration":
        return cls((1 << n) - 1, n)

    @classmethod
    def unit(cls, n: int, i: int) -> "Configuration":
        """``e_i``."""
        if not 1 <= i <= n:
            raise DimensionError(f"index {i} out of range 1..{n}")
        return cls(1 << (i - 1), n)

    def __getitem__(self, i: int) -> int:
        """Value of ``x_i`` (1-based)."""
        if not 1 <= i <= self.n:
            raise DimensionError(f"index {i} out of range 1..{self.n}")
        return (self.bits >> (i - 1)) & 1

    def __str__(self) -> str:
        return format_word(self.bits, self.n)

    def __xor__(self, other: "Configuration") -> "Configuration":
        if other.n != self.n:
            raise DimensionError("xor of configurations of different length")
        return Configuration(self.bits ^ other.bits, self.n)

    def __invert__(self) -> "Configuration":
        return Configuration(self.bits ^ ((1 << self.n) - 1), self.n)

    def tuple(self) -> tuple[int, ...]:
        return tuple((self.bits >> k) & 1 for k in range(self.n))

    def project(self, index_set: Iterable[int]) -> "Configuration":
        """``x_I``: keep the components in ``index_set`` (in increasing order)."""
        members = _members(index_set, self.n)
        if not members:
            raise DimensionError("projection onto the empty set")
        return Configuration.from_bits([self[i] for i in members])


def format_word(word: int, n: int) -> str:
    """Render a configuration word as ``x_1 ... x_n``."""
    return "".join("1" if (word >> k) & 1 else "0" for k in range(n))


def _members(index_set: Iterable[int], n: int) -> tuple[int, ...]:
    members = tuple(sorted(set(int(i) for i in index_set)))
    for i in members:
        if not 1 <= i <= n:
            raise DimensionError(f"index {i} out of range 1..{n}")
    return members


def index_mask(index_set: Iterable[int], n: int) -> int:
    """Word with a one in bit ``i - 1`` for each ``i`` in the set."""
    mask = 0
    for i in _members(index_set, n):
        mask |= 1 << (i - 1)
    return mask


def negate_on(x: Configuration, index_set: Iterable[int]) -> Configuration:
    """``x`` with the components in ``index_set`` negated."""
    return Configuration(x.bits ^ index_mask(index_set, x.n), x.n)


class TruthTable:
    """Value table of one Boolean function over all ``2**n`` configurations.

    ``values[k]`` is the value at the configuration whose word is ``k``.
    The underlying array is read-only.
    """

    __slots__ = ("n", "values")

    def __init__(self, n: int, values):
        _check_n(n)
        arr = np.asarray(values)
        if arr.shape != (1 << n,):
            raise DimensionError(f"table for n={n} needs {1 << n} entries, got {arr.shape}")
        if arr.dtype != np.uint8:
            if arr.size and not np.isin(arr, (0, 1)).all():
                raise ValueError("truth table entries must be 0 or 1")
            arr = arr.astype(np.uint8)
        else:
            if arr.size and arr.max() > 1:
                raise ValueError("truth table entries must be 0 or 1")
            arr = arr.copy()
        arr.setflags(write=False)
        self.n = n
        self.values = arr

    @classmethod
    def from_int(cls, n: int, word: int) -> "TruthTable":
        """Table whose bit ``k`` (little-endian) is the value at configuration ``k``."""
        if word < 0 or word >> (1 << n):
            raise ValueError(f"integer does not fit a {1 << n}-entry table")
        raw = word.to_bytes(((1 << n) + 7) // 8, "little")
        bits = np.unpackbits(np.frombuffer(raw, dtype=np.uint8), bitorder="little")
        return cls(n, bits[: 1 << n])

    @classmethod
    def constant(cls, n: int, value: int) -> "TruthTable":
        return cls(n, np.full(1 << n, value & 1, dtype=np.uint8))

    @classmethod
    def variable(cls, n: int, i: int, negated: bool = False) -> "TruthTable":
        col = bit_column(n, i)
        return cls(n, col ^ 1 if negated else col)

    def to_int(self) -> int:
        packed = np.packbits(self.values, bitorder="little")
        return int.from_bytes(packed.tobytes(), "little")

    def __call__(self, x: Union[Configuration, int]) -> int:
        return int(self.values[_word(x, self.n)])

    def __len__(self) -> int:
        return 1 << self.n

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, TruthTable)
            and other.n == self.n
            and np.array_equal(other.values, self.values)
        )

    def __hash__(self) -> int:
        return hash((self.n, self.values.tobytes()))

    def __repr__(self) -> str:
        return f"TruthTable(n={self.n}, hex={self.to_int():x})"

    @property
    def true_count(self) -> int:
        """``|T(f)|``."""
        return int(self.values.sum(dtype=np.int64))

    @property
    def false_count(self) -> int:
        return (1 << self.n) - self.true_count

    def true_points(self) -> np.ndarray:
        return np.flatnonzero(self.values)

    def false_points(self) -> np.ndarray:
        return np.flatnonzero(self.values == 0)


def _word(x: Union[Configuration, int], n: int) -> int:
    if isinstance(x, Configuration):
        if x.n != n:
            raise DimensionError(f"configuration has {x.n} bits, network has {n}")
        return x.bits
    x = int(x)
    if not 0 <= x < (1 << n):
        raise DimensionError(f"word {x} does not fit in {n} bits")
    return x


class BooleanNetwork:
    """``f = (f_1, ..., f_n)`` given by one truth table per variable."""

    __slots__ = ("n", "locals", "__dict__")

    def __init__(self, locals_: Sequence[TruthTable]):
        locals_ = tuple(locals_)
        if not locals_:
            raise DimensionError("a network needs at least one local function")
        n = len(locals_)
        for t in locals_:
            if not isinstance(t, TruthTable):
                raise TypeError("local functions must be TruthTable instances")
            if t.n != n:
                raise DimensionError(f"local function over {t.n} variables in a network of {n}")
        self.n = n
        self.locals = locals_

    @classmethod
    def from_map(cls, successor) -> "BooleanNetwork":
        """Network whose global map sends word ``k`` to ``successor[k]``."""
        succ = np.asarray(successor, dtype=np.int64)
        size = succ.shape[0]
        n = size.bit_length() - 1
        if size < 2 or (1 << n) != size:
            raise DimensionError(f"state map length {size} is not a power of two >= 2")
        if succ.min() < 0 or succ.max() >= size:
            raise DimensionError("state map leaves the configuration space")
        net = cls([TruthTable(n, ((succ >> j) & 1).astype(np.uint8)) for j in range(n)])
        net.__dict__["successor"] = _frozen(succ)
        return net

    @classmethod
    def identity(cls, n: int) -> "BooleanNetwork":
        return cls([TruthTable.variable(n, i) for i in range(1, n + 1)])

    @classmethod
    def constant(cls, n: int, value: int = 0) -> "BooleanNetwork":
        return cls([TruthTable.constant(n, value) for _ in range(n)])

    @cached_property
    def successor(self) -> np.ndarray:
        """Global map as an array of words (read-only)."""
        succ = np.zeros(1 << self.n, dtype=np.int64)
        for j, t in enumerate(self.locals):
            succ |= t.values.astype(np.int64) << j
        return _frozen(succ)

    def __call__(self, x: Union[Configuration, int]):
        return evaluate(self, x)

    def __eq__(self, other) -> bool:
        return isinstance(other, BooleanNetwork) and other.locals == self.locals

    def __hash__(self) -> int:
        return hash(self.locals)

    def __repr__(self) -> str:
        return f"BooleanNetwork(n={self.n})"

    def iterate(self, x: int, k: int) -> int:
        """``f^k(x)`` on words."""
        succ = self.successor
        for _ in range(k):
            x = int(succ[x])
        return x


def _frozen(arr: np.ndarray) -> np.ndarray:
    arr.setflags(write=False)
    return arr


def evaluate(f: BooleanNetwork, x: Union[Configuration, int]):
    """``f(x)``. Returns a :class:`Configuration` for configuration input, a word for an int."""
    word = int(f.successor[_word(x, f.n)])
    return Configuration(word, f.n) if isinstance(x, Configuration) else word


def evaluate_local(f: BooleanNetwork, j: int, x: Union[Configuration, int]) -> int:
    """``f_j(x)`` for 1-based ``j``."""
    if not 1 <= j <= f.n:
        raise DimensionError(f"local index {j} out of range 1..{f.n}")
    return f.locals[j - 1](x)


def point_counts(f: BooleanNetwork, j: int, condition: tuple[int, int] | None = None) -> int:
    """``|T(f_j)|`` or, with ``condition=(i, a)``, ``|T(f_j, x_i = a)|``."""
    if not 1 <= j <= f.n:
        raise DimensionError(f"local index {j} out of range 1..{f.n}")
    values = f.locals[j - 1].values
    if condition is None:
        return int(values.sum(dtype=np.int64))
    i, a = condition
    if not 1 <= i <= f.n:
        raise DimensionError(f"condition index {i} out of range 1..{f.n}")
    return int(values[bit_column(f.n, i) == (a & 1)].sum(dtype=np.int64))


def subnetwork(f: BooleanNetwork, index_set: Iterable[int]) -> BooleanNetwork:
    """``f_I``: the network induced on a proper, non-empty index set.

    Well-definedness is checked exhaustively: no ``f_j`` with ``j`` in the
    set may change when a variable outside the set is flipped.
    """
    members = _members(index_set, f.n)
    if not members:
        raise SubnetworkError("index set must be non-empty")
    if len(members) == f.n:
        raise SubnetworkError("index set must be a proper subset of [n]")
    outside = [i for i in range(1, f.n + 1) if i not in members]
    words = states(f.n)
    for j in members:
        values = f.locals[j - 1].values
        for i in outside:
            if np.any(values != values[words ^ (1 << (i - 1))]):
                raise SubnetworkError(
                    f"f_{j} depends on x_{i}, which lies outside the index set", (i, j)
                )
    # all outside bits zero; the check above makes the choice irrelevant
    m = len(members)
    sub_words = np.arange(1 << m, dtype=np.int64)
    full = np.zeros_like(sub_words)
    for pos, i in enumerate(members):
        full |= ((sub_words >> pos) & 1) << (i - 1)
    return BooleanNetwork([TruthTable(m, f.locals[j - 1].values[full]) for j in members])
