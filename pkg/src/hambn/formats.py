"""The ``.bn`` network text format, expression trees and DOT export.

A ``.bn`` file is a header ``n=<int>`` followed by one definition per
variable::

    n=3
    f1 = !x1 & !x2 | !x2 & !x3 | !x1 & !x3   # comments run to end of line
    f2 = table e8                            # hex truth table

Operators from tightest to loosest: ``!``, ``&``, ``^``, ``|``; binary ones
associate to the left. A hex table is the integer whose bit ``k`` is the
value at configuration word ``k`` (``x_1`` is bit 0), written most
significant digit first and left-padded to ``ceil(2**n / 4)`` digits.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Optional, Union

import numpy as np

from .core import BooleanNetwork, DimensionError, TruthTable, bit_column, format_word
from .dynamics import FunctionalGraph
from .interaction import SignedDigraph


class ParseError(ValueError):
    """Syntax or binding error; ``line`` and ``column`` are 1-based."""

    def __init__(self, message: str, line: int, column: int, expected: Iterable[str] = ()):
        self.line = line
        self.column = column
        self.expected = tuple(sorted(set(expected)))
        detail = f" (expected one of: {', '.join(self.expected)})" if self.expected else ""
        super().__init__(f"line {line}, column {column}: {message}{detail}")


# expression trees ------------------------------------------------------------


@dataclass(frozen=True)
class Var:
    index: int

    def __str__(self) -> str:
        return f"x{self.index}"


@dataclass(frozen=True)
class Const:
    value: int

    def __str__(self) -> str:
        return str(self.value)


@dataclass(frozen=True)
class Not:
    arg: "Expression"

    def __str__(self) -> str:
        return f"!{_wrap(self.arg, Not)}"


@dataclass(frozen=True)
class And:
    left: "Expression"
    right: "Expression"

    def __str__(self) -> str:
        return f"{_wrap(self.left, And)} & {_wrap(self.right, And, right=True)}"


@dataclass(frozen=True)
class Xor:
    left: "Expression"
    right: "Expression"

    def __str__(self) -> str:
        return f"{_wrap(self.left, Xor)} ^ {_wrap(self.right, Xor, right=True)}"


@dataclass(frozen=True)
class Or:
    left: "Expression"
    right: "Expression"

    def __str__(self) -> str:
        return f"{_wrap(self.left, Or)} | {_wrap(self.right, Or, right=True)}"


Expression = Union[Var, Const, Not, And, Xor, Or]

_LEVEL = {Var: 0, Const: 0, Not: 0, And: 1, Xor: 2, Or: 3}


def _wrap(e: Expression, parent: type, right: bool = False) -> str:
    inner, outer = _LEVEL[type(e)], _LEVEL[parent]
    if inner > outer or (right and inner == outer and inner > 0):
        return f"({e})"
    return str(e)


def variables(e: Expression) -> set[int]:
    if isinstance(e, Var):
        return {e.index}
    if isinstance(e, Const):
        return set()
    if isinstance(e, Not):
        return variables(e.arg)
    return variables(e.left) | variables(e.right)


def evaluate_expression(e: Expression, n: int) -> np.ndarray:
    """Truth table (``uint8``) of ``e`` over ``n`` variables."""
    if isinstance(e, Var):
        if not 1 <= e.index <= n:
            raise DimensionError(f"x{e.index} outside x1..x{n}")
        return bit_column(n, e.index)
    if isinstance(e, Const):
        return np.full(1 << n, e.value, dtype=np.uint8)
    if isinstance(e, Not):
        return evaluate_expression(e.arg, n) ^ 1
    a, b = evaluate_expression(e.left, n), evaluate_expression(e.right, n)
    if isinstance(e, And):
        return a & b
    if isinstance(e, Or):
        return a | b
    return a ^ b


# documents -------------------------------------------------------------------


@dataclass(frozen=True)
class NetworkDocument:
    n: int
    # (j, body) in file order; body is an Expression or a TruthTable
    definitions: tuple[tuple[int, Union[Expression, TruthTable]], ...]

    def to_network(self) -> BooleanNetwork:
        body = dict(self.definitions)
        tables = []
        for j in range(1, self.n + 1):
            b = body[j]
            tables.append(b if isinstance(b, TruthTable) else TruthTable(self.n, evaluate_expression(b, self.n)))
        return BooleanNetwork(tables)


_TOKEN = re.compile(
    r"\s*(?:(?P<var>x(?P<idx>\d+))|(?P<const>[01])(?![0-9A-Za-z_])|(?P<op>[!&^|()]))"
)


class _ExprParser:
    def __init__(self, text: str, line: int, offset: int, n: int):
        self.text = text
        self.line = line
        self.offset = offset  # column of text[0], 1-based
        self.n = n
        self.pos = 0
        self._peeked = None

    def _error(self, message: str, expected: Iterable[str], at: Optional[int] = None):
        col = self.offset + (self.pos if at is None else at)
        raise ParseError(message, self.line, col, expected)

    def _skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> Optional[str]:
        self._skip()
        if self.pos >= len(self.text):
            return None
        m = _TOKEN.match(self.text, self.pos)
        if not m:
            return "?"
        if m.group("var"):
            return "var"
        if m.group("const"):
            return "const"
        return m.group("op")

    def take(self) -> re.Match:
        self._skip()
        m = _TOKEN.match(self.text, self.pos)
        self.pos = m.end()
        return m

    def parse(self) -> Expression:
        e = self.parse_or()
        self._skip()
        if self.pos < len(self.text):
            self._error(f"unexpected {self.text[self.pos]!r}", ["&", "^", "|", "end of line"])
        return e

    def parse_or(self) -> Expression:
        e = self.parse_xor()
        while self.peek() == "|":
            self.take()
            e = Or(e, self.parse_xor())
        return e

    def parse_xor(self) -> Expression:
        e = self.parse_and()
        while self.peek() == "^":
            self.take()
            e = Xor(e, self.parse_and())
        return e

    def parse_and(self) -> Expression:
        e = self.parse_not()
        while self.peek() == "&":
            self.take()
            e = And(e, self.parse_not())
        return e

    def parse_not(self) -> Expression:
        if self.peek() == "!":
            self.take()
            return Not(self.parse_not())
        return self.parse_atom()

    def parse_atom(self) -> Expression:
        kind = self.peek()
        expected = ["x<k>", "0", "1", "!", "("]
        if kind == "var":
            start = self.pos
            m = self.take()
            k = int(m.group("idx"))
            if not 1 <= k <= self.n:
                self._error(f"variable index x{k} out of range 1..{self.n}", [], at=start)
            return Var(k)
        if kind == "const":
            return Const(int(self.take().group("const")))
        if kind == "(":
            self.take()
            e = self.parse_or()
            if self.peek() != ")":
                self._error("unbalanced parenthesis", [")", "&", "^", "|"])
            self.take()
            return e
        if kind is None:
            self._error("unexpected end of expression", expected)
        self._error(f"unexpected {self.text[self.pos]!r}", expected)


_HEADER = re.compile(r"\s*n\s*=\s*(\d+)\s*$")
_DEF = re.compile(r"\s*f(\d+)\s*=\s*")
_TABLE = re.compile(r"table\s+([0-9A-Fa-f]+)\s*$")


def parse_expression(text: str, n: int) -> Expression:
    return _ExprParser(text, 1, 1, n).parse()


def parse_network(text: str) -> NetworkDocument:
    n = None
    defs: list[tuple[int, Union[Expression, TruthTable]]] = []
    seen: dict[int, int] = {}
    last_line = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        last_line = lineno
        if n is None:
            m = _HEADER.match(line)
            if not m:
                col = len(line) - len(line.lstrip()) + 1
                raise ParseError("missing header", lineno, col, ["n=<int>"])
            n = int(m.group(1))
            if n < 1:
                raise ParseError("n must be at least 1", lineno, m.start(1) + 1)
            continue
        m = _DEF.match(line)
        if not m:
            col = len(line) - len(line.lstrip()) + 1
            raise ParseError("expected a definition", lineno, col, ["f<j> ="])
        j = int(m.group(1))
        if not 1 <= j <= n:
            raise ParseError(f"f{j} out of range 1..{n}", lineno, m.start(1))
        if j in seen:
            raise ParseError(f"duplicate definition of f{j} (first on line {seen[j]})", lineno, m.start(1))
        seen[j] = lineno
        rest = line[m.end():]
        t = _TABLE.match(rest)
        if t:
            digits = t.group(1)
            value = int(digits, 16)
            if value >> (1 << n):
                raise ParseError(f"table for f{j} has more than {1 << n} bits", lineno, m.end() + t.start(1) + 1)
            defs.append((j, TruthTable.from_int(n, value)))
        else:
            expr = _ExprParser(rest, lineno, m.end() + 1, n).parse()
            defs.append((j, expr))
    if n is None:
        raise ParseError("empty document", max(last_line, 1), 1, ["n=<int>"])
    missing = [j for j in range(1, n + 1) if j not in seen]
    if missing:
        names = ", ".join(f"f{j}" for j in missing)
        raise ParseError(f"missing definition for {names}", last_line, 1, [f"f{j} =" for j in missing])
    return NetworkDocument(n, tuple(defs))


def load_network(text: str) -> BooleanNetwork:
    return parse_network(text).to_network()


def hex_table(t: TruthTable) -> str:
    width = max(1, ((1 << t.n) + 3) // 4)
    return format(t.to_int(), "x").rjust(width, "0")


def dnf(t: TruthTable) -> str:
    """Minterm DNF; ``0``/``1`` for constants."""
    ones = np.flatnonzero(t.values).tolist()
    if not ones:
        return "0"
    if len(ones) == 1 << t.n:
        return "1"
    terms = []
    for w in ones:
        lits = [f"x{i + 1}" if (w >> i) & 1 else f"!x{i + 1}" for i in range(t.n)]
        terms.append(" & ".join(lits))
    return " | ".join(terms)


def serialize_network(f: BooleanNetwork, mode: str = "table") -> str:
    if mode not in ("table", "expr"):
        raise ValueError(f"unknown mode {mode!r}")
    lines = [f"n={f.n}"]
    for j, t in enumerate(f.locals, start=1):
        body = f"table {hex_table(t)}" if mode == "table" else dnf(t)
        lines.append(f"f{j} = {body}")
    return "\n".join(lines)


# DOT -------------------------------------------------------------------------


def _quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def export_dot(g: Union[FunctionalGraph, SignedDigraph], name: str = "G", rankdir: Optional[str] = None) -> str:
    """Deterministic DOT text; vertices and arcs are emitted in sorted order."""
    lines = [f"digraph {_quote(name)} {{"]
    if rankdir:
        lines.append(f"  rankdir={rankdir};")
    if isinstance(g, FunctionalGraph):
        labels = [format_word(v, g.n) for v in range(g.size)]
        for v in sorted(range(g.size), key=lambda v: labels[v]):
            lines.append(f"  {_quote(labels[v])};")
        arcs = sorted((labels[v], labels[int(w)]) for v, w in enumerate(g.successor))
        for a, b in arcs:
            lines.append(f"  {_quote(a)} -> {_quote(b)};")
    elif isinstance(g, SignedDigraph):
        for v in range(1, g.n + 1):
            lines.append(f"  {_quote(f'x{v}')};")
        for i, j, s in g.arcs:
            lines.append(f"  {_quote(f'x{i}')} -> {_quote(f'x{j}')} [label={_quote(s.value)}];")
    else:
        raise TypeError(f"cannot export {type(g).__name__}")
    lines.append("}")
    return "\n".join(lines) + "\n"
