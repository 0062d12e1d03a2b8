"""Theorem-verification suites with reproducible, replayable reports.

Each suite takes a parameter dict (``n``, ``samples``, ``seed`` and, where
useful, ``workers``), checks a statement over an exhaustive or seeded random
ensemble and returns a :class:`SuiteReport`. Every violation carries the
offending network in ``.bn`` table form so it can be replayed through the
library. Conjecture suites only ever report ``refuted-conjecture`` or
``inconclusive``.
"""

from __future__ import annotations

import functools
import itertools
import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from . import ensembles, sweep
from .construction import (
    Variant,
    build_family,
    dependency_at,
    paper_fixture,
    realize_hamiltonian,
    realize_two_hamiltonian,
    table1_predicate,
    z_config,
)
from .core import BooleanNetwork, TruthTable, states
from .dynamics import FunctionalGraph, Kind, analyze, classify, isomorphic, transition_graph
from .formats import serialize_network
from .interaction import ArcSign, interaction_graph
from .properties import assumability_violation, is_self_dual, threshold_feasibility, unate_analysis

PASS, FAIL = "pass", "fail"
REFUTED, INCONCLUSIVE = "refuted-conjecture", "inconclusive"

REPORT_SCHEMA = {
    "type": "object",
    "required": ["suite", "params", "seed", "instances_checked", "violations", "elapsed_ms", "verdict"],
    "properties": {
        "suite": {"type": "string"},
        "params": {"type": "object"},
        "seed": {"type": "integer"},
        "instances_checked": {"type": "integer", "minimum": 0},
        "violations": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["check", "network"],
                "properties": {
                    "check": {"type": "string"},
                    "network": {"type": "string"},
                    "note": {"type": "string"},
                },
            },
        },
        "elapsed_ms": {"type": "number", "minimum": 0},
        "verdict": {"enum": [PASS, FAIL, REFUTED, INCONCLUSIVE]},
        "details": {"type": "object"},
    },
}


class SuiteError(ValueError):
    """Unknown suite or parameters outside the documented caps."""


@dataclass
class SuiteReport:
    suite: str
    params: dict
    seed: int
    instances_checked: int
    violations: list
    elapsed: float
    verdict: str
    # per-suite tallies and tables beyond the pass/fail outcome
    details: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "params": self.params,
            "seed": self.seed,
            "instances_checked": self.instances_checked,
            "violations": self.violations,
            "elapsed_ms": round(self.elapsed * 1000.0, 3),
            "verdict": self.verdict,
            "details": self.details,
        }

    def to_json(self, indent: int | None = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent, sort_keys=False, default=str)

    def fingerprint(self) -> str:
        """Everything except timing, for reproducibility comparisons."""
        d = self.to_dict()
        d.pop("elapsed_ms")
        return json.dumps(d, sort_keys=True, default=str)

    def table(self) -> str:
        rows = [
            ("suite", self.suite),
            ("params", ", ".join(f"{k}={v}" for k, v in self.params.items())),
            ("seed", str(self.seed)),
            ("instances", f"{self.instances_checked:,}"),
            ("violations", str(len(self.violations))),
            ("elapsed", f"{self.elapsed:.2f} s"),
            ("verdict", self.verdict),
        ]
        width = max(len(k) for k, _ in rows)
        lines = [f"{k.ljust(width)}  {v}" for k, v in rows]
        for key, value in self.details.items():
            lines.append(f"{key.ljust(width)}  {_short(value)}")
        for v in self.violations[:5]:
            note = f" ({v['note']})" if v.get("note") else ""
            lines.append(f"violation   {v['check']}{note}")
        if len(self.violations) > 5:
            lines.append(f"...         {len(self.violations) - 5} more")
        return "\n".join(lines)


def _short(value) -> str:
    text = json.dumps(value, default=str)
    return text if len(text) <= 200 else text[:197] + "..."


def violation(check: str, f, note: str = "") -> dict:
    net = f if isinstance(f, BooleanNetwork) else BooleanNetwork.from_map(f)
    out = {"check": check, "network": serialize_network(net, "table")}
    if note:
        out["note"] = note
    return out


# registry ---------------------------------------------------------------------


@dataclass(frozen=True)
class _Suite:
    run: Callable
    defaults: dict
    n_range: tuple[int, int]
    max_samples: int
    conjecture: bool = False


SUITES: dict[str, _Suite] = {}


def _register(name, defaults, n_range, max_samples=100_000, conjecture=False):
    def wrap(fn):
        SUITES[name] = _Suite(fn, defaults, n_range, max_samples, conjecture)
        return fn

    return wrap


def _normalize(name: str, params: dict | None) -> dict:
    suite = SUITES[name]
    p = dict(suite.defaults)
    for key, value in (params or {}).items():
        if value is None:
            continue
        if key not in ("n", "samples", "seed", "workers"):
            raise SuiteError(f"unknown parameter {key!r} for suite {name}")
        p[key] = value
    n = p["n"]
    p["n"] = sorted(set([n] if isinstance(n, int) else list(n)))
    lo, hi = suite.n_range
    bad = [k for k in p["n"] if not lo <= k <= hi]
    if bad:
        raise SuiteError(f"suite {name} supports n in {lo}..{hi}; got {bad}")
    p["samples"] = int(p.get("samples", 0))
    if not 0 <= p["samples"] <= suite.max_samples:
        raise SuiteError(f"suite {name} caps samples at {suite.max_samples}")
    p["seed"] = int(p.get("seed", 0))
    p["workers"] = max(1, int(p.get("workers", 1)))
    return p


def run_suite(name: str, params: dict | None = None) -> SuiteReport:
    if name not in SUITES:
        raise SuiteError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    suite = SUITES[name]
    p = _normalize(name, params)
    started = time.perf_counter()
    instances, violations, details = suite.run(p)
    elapsed = time.perf_counter() - started
    if suite.conjecture:
        verdict = REFUTED if violations else INCONCLUSIVE
    else:
        verdict = FAIL if violations else PASS
    shown = {k: v for k, v in p.items() if k not in ("seed", "workers")}
    return SuiteReport(name, shown, p["seed"], int(instances), violations, elapsed, verdict, details)


# exhaustive n = 3 sweep, shared by the kernel-backed suites --------------------


def _shard(bounds):
    return sweep.exhaustive_n3(*bounds)


@functools.lru_cache(maxsize=None)
def exhaustive_n3(workers: int = 1) -> sweep.SweepResult:
    """All ``2**24`` maps on three variables; sharded across processes when ``workers > 1``."""
    total = 1 << 24
    if workers <= 1:
        return sweep.exhaustive_n3(0, total)
    step = -(-total // (workers * 4))
    bounds = [(lo, min(lo + step, total)) for lo in range(0, total, step)]
    with ProcessPoolExecutor(workers) as pool:
        parts = list(pool.map(_shard, bounds))
    return sweep.merge(parts)


def _sample_maps(n: int, samples: int, seed: int, generators) -> np.ndarray:
    rows = []
    for idx in range(samples):
        rng = ensembles.instance_rng(seed, n, idx)
        gen = generators[idx % len(generators)]
        rows.append(gen(n, rng))
    return np.array(rows, dtype=np.int64).reshape(samples, 1 << n)


def _kernel_suite(p: dict, check: str, generators, exhaustive_n: int = 3):
    instances = 0
    violations = []
    details = {}
    for n in p["n"]:
        if n == exhaustive_n:
            res = exhaustive_n3(p["workers"])
            mode = "exhaustive"
        else:
            if n > 6:
                raise SuiteError("sampled kernel suites support n <= 6")
            maps = _sample_maps(n, p["samples"], p["seed"], generators)
            res = sweep.inspect_maps(maps, n)
            mode = "sampled"
        instances += res.instances
        details[f"n={n}"] = {
            "mode": mode,
            "instances": res.instances,
            "premise_holds": res.applicable[check],
            "violations": res.violations[check],
            "classes": res.classes,
        }
        if res.violations[check]:
            violations.append(
                violation(check, res.witnesses[check], f"n={n}: {res.violations[check]} violating maps, first shown")
            )
    return instances, violations, details


def _gen_closed_subset(n, rng):
    mask = int(rng.integers(1, (1 << n) - 1))
    k = bin(mask).count("1")
    choice = int(rng.integers(3))
    if choice == 0:
        inner = ensembles.uniform_map(k, rng)
    elif choice == 1:
        inner = ensembles.rho_map(k, rng)
    else:
        inner = ensembles.cyclic_permutation(k, rng)
    return ensembles.closed_subset_map(n, rng, mask, inner)


def _gen_odd_intermediate(n, rng):
    size = 1 << n
    odd = list(range(3, size, 2))
    return ensembles.rho_map(n, rng, int(rng.choice(odd)))


def _gen_intermediate(n, rng):
    return ensembles.rho_map(n, rng, int(rng.integers(2, 1 << n)))


_KERNEL_DEFAULTS = {"n": [3, 4, 5, 6], "samples": 2000, "seed": 0, "workers": 1}


@_register("odd-indegree", _KERNEL_DEFAULTS, (3, 6))
def _odd_indegree(p):
    return _kernel_suite(p, "odd-indegree", [ensembles.uniform_map])


@_register("unique-garden", _KERNEL_DEFAULTS, (3, 6))
def _unique_garden(p):
    return _kernel_suite(p, "unique-garden", [ensembles.unique_garden_map])


@_register("subnetwork-cycle", _KERNEL_DEFAULTS, (3, 6))
def _subnetwork_cycle(p):
    gens = [ensembles.rho_map, ensembles.quasi_map, _gen_closed_subset, _gen_closed_subset]
    return _kernel_suite(p, "subnetwork-cycle", gens)


@_register("hamiltonian-connected", _KERNEL_DEFAULTS, (3, 6))
def _hamiltonian_connected(p):
    gens = [ensembles.cyclic_permutation, ensembles.rho_map, ensembles.quasi_map]
    return _kernel_suite(p, "hamiltonian-unilateral", gens)


@_register("strong-connectivity", _KERNEL_DEFAULTS, (3, 6))
def _strong(p):
    gens = [lambda n, rng: ensembles.rho_map(n, rng, 1), ensembles.quasi_map, _gen_odd_intermediate]
    return _kernel_suite(p, "strong-connectivity", gens)


@_register("period-height-sum", _KERNEL_DEFAULTS, (3, 6))
def _period_height(p):
    return _kernel_suite(p, "period-height-sum", [ensembles.rho_map])


@_register("conjecture-tournament", _KERNEL_DEFAULTS, (3, 6), conjecture=True)
def _tournament(p):
    gens = [ensembles.cyclic_permutation, _gen_intermediate]
    return _kernel_suite(p, "conjecture-tournament", gens)


# self-duality ------------------------------------------------------------------


def _iterate_all(succ: np.ndarray, k: int) -> np.ndarray:
    cur = np.arange(succ.size, dtype=np.int64)
    for _ in range(k):
        cur = succ[cur]
    return cur


def _local_signature(succ: np.ndarray, n: int) -> np.ndarray:
    """``sig[x, i]`` packs the arcs of ``G_x`` leaving ``i`` and their signs."""
    words = states(n)
    sig = np.zeros((words.size, n), dtype=np.int64)
    for i in range(n):
        diff = succ ^ succ[words ^ (1 << i)]
        high = succ[words | (1 << i)]
        sig[:, i] = diff | ((high & diff) << n)
    return sig


@_register("selfdual-iterates", {"n": list(range(1, 9)), "samples": 60, "seed": 0}, (1, 10))
def _selfdual_iterates(p):
    instances = 0
    violations = []
    counts = {"self_dual": 0, "controls": 0, "controls_self_dual": 0, "local_graph_checks": 0}
    for n in p["n"]:
        size = 1 << n
        full = size - 1
        words = states(n)
        for idx in range(p["samples"]):
            rng = ensembles.instance_rng(p["seed"], n, idx)
            mask = full if idx % 4 == 0 else int(rng.integers(1, size))
            members = [i + 1 for i in range(n) if (mask >> i) & 1]
            control = idx % 2 == 1
            succ = ensembles.cyclic_permutation(n, rng) if control else ensembles.selfdual_cycle(n, mask, rng)
            f = BooleanNetwork.from_map(succ)
            instances += 1
            sd = bool(is_self_dual(f, members))
            half = bool(np.array_equal(_iterate_all(succ, size // 2), words ^ mask))
            if control:
                counts["controls"] += 1
                counts["controls_self_dual"] += sd
            else:
                counts["self_dual"] += 1
                if not sd:
                    violations.append(violation("generator", f, f"n={n}: generated cycle not self-dual"))
            if sd != half:
                violations.append(violation("half-period-flip", f, f"n={n}, I={members}: self-dual={sd}, half-iterate flip={half}"))
            if sd:
                cur = words.copy()
                for k in range(1, size + 1):
                    cur = succ[cur]
                    if not np.array_equal(cur, cur[words ^ mask] ^ mask):
                        violations.append(violation("iterates", f, f"n={n}, I={members}, k={k}"))
                        break
                if mask == full:
                    counts["local_graph_checks"] += 1
                    sig = _local_signature(succ, n)
                    if not np.array_equal(sig, sig[words ^ full]):
                        violations.append(violation("local-graph-symmetry", f, f"n={n}"))
    return instances, violations, counts


def _depends_on_all(tables: np.ndarray, n: int) -> np.ndarray:
    words = states(n)
    out = np.ones(tables.shape[0], dtype=bool)
    for i in range(n):
        out &= np.any(tables != tables[:, words ^ (1 << i)], axis=1)
    return out


def _lemma_point_counts(n: int):
    """Exhaustive check over single functions of ``n`` variables.

    Hypothesis: ``|T| = 0 mod 4``, ``|T| > 0`` and some ``|T(x_i = a)|`` odd.
    Conclusion: the function depends on every variable.
    """
    size = 1 << n
    codes = np.arange(1 << size, dtype=np.int64)
    tables = ((codes[:, None] >> np.arange(size)) & 1).astype(np.uint8)
    count = tables.sum(axis=1)
    words = states(n)
    odd = np.zeros(codes.size, dtype=bool)
    for i in range(n):
        ones = tables[:, ((words >> i) & 1) == 1].sum(axis=1)
        odd |= (ones % 2 == 1) | ((count - ones) % 2 == 1)
    premise = (count % 4 == 0) & (count > 0) & odd
    bad = premise & ~_depends_on_all(tables, n)
    return int(codes.size), int(premise.sum()), [int(c) for c in codes[bad][:3]]


@_register("selfdual-indegree", {"n": list(range(3, 9)), "samples": 60, "seed": 0}, (1, 10))
def _selfdual_indegree(p):
    instances = 0
    violations = []
    details = {}
    for n in p["n"]:
        if n == 2:
            continue
        size = 1 << n
        for idx in range(p["samples"]):
            rng = ensembles.instance_rng(p["seed"], n, idx)
            mask = int(rng.integers(1, size))
            f = BooleanNetwork.from_map(ensembles.selfdual_cycle(n, mask, rng))
            g = interaction_graph(f)
            instances += 1
            short = [j for j in range(1, n + 1) if (mask >> (j - 1)) & 1 and g.in_degree(j) != n]
            if short:
                violations.append(violation("indegree", f, f"n={n}, I mask={mask}: j={short} below n"))
    for n in (3, 4):
        checked, premise, bad = _lemma_point_counts(n)
        instances += checked
        details[f"point-count lemma n={n}"] = {"functions": checked, "premise_holds": premise, "violations": len(bad)}
        for code in bad:
            t = TruthTable.from_int(n, code)
            net = BooleanNetwork([t] + [TruthTable.constant(n, 0)] * (n - 1))
            violations.append(violation("point-count-lemma", net, f"n={n}: f1 fails to depend on all variables"))
    return instances, violations, details


@_register("n2-signed-cycle", {"n": [2], "samples": 0, "seed": 0}, (2, 2))
def _n2_signed_cycle(p):
    violations = []
    matched = 0
    for code in range(256):
        succ = [(code >> (2 * s)) & 3 for s in range(4)]
        g = FunctionalGraph(succ, 2)
        if classify(g).kind is not Kind.HAMILTONIAN_CYCLE:
            continue
        f = BooleanNetwork.from_map(succ)
        if not unate_analysis(f).is_unate:
            continue
        matched += 1
        arcs = interaction_graph(f).arcs
        ok = (
            len(arcs) == 2
            and {(i, j) for i, j, _ in arcs} == {(1, 2), (2, 1)}
            and {s for _, _, s in arcs} == {ArcSign.POSITIVE, ArcSign.NEGATIVE}
        )
        if not ok:
            violations.append(violation("signed-2-cycle", f, f"arcs {arcs}"))
    return 256, violations, {"unate_hamiltonian_cycles": matched}


# the family f^[n] ----------------------------------------------------------------


@_register("family", {"n": list(range(1, 13)), "samples": 0, "seed": 0}, (1, 16))
def _family(p):
    violations = []
    details = {}
    for n in p["n"]:
        f = build_family(n).network
        size = 1 << n
        summary = analyze(transition_graph(f))
        row = {}
        row["class"] = str(classify(transition_graph(f)))
        if row["class"] != "hamiltonian-cycle" or summary.period != size:
            violations.append(violation("hamiltonian-cycle", f, f"n={n}: {row['class']}, period {summary.period}"))
        row["self_dual"] = bool(is_self_dual(f, range(1, n + 1)))
        if not row["self_dual"]:
            violations.append(violation("self-dual", f, f"n={n}"))
        unate = unate_analysis(f)
        row["unate"] = unate.status.value
        if not unate.is_unate:
            violations.append(violation("unate", f, f"n={n}: witness {unate.witness}"))
        g = interaction_graph(f)
        pairs = g.arc_set()
        if n == 2:
            ok = pairs == {(1, 2), (2, 1)} and {s for _, _, s in g.arcs} == {ArcSign.POSITIVE, ArcSign.NEGATIVE}
            row["graph"] = "signed 2-cycle" if ok else repr(g)
        else:
            ok = len(pairs) == n * n
            row["graph"] = "K_n" if ok else f"{len(pairs)} arcs"
        if not ok:
            violations.append(violation("interaction-graph", f, f"n={n}: {row['graph']}"))
        if n >= 4 and n <= 12:
            cert = threshold_feasibility(f.locals[-1])
            row["last_local_threshold"] = cert.feasible
            if cert.feasible:
                weights = ", ".join(str(w) for w in cert.weights)
                violations.append(
                    violation("non-threshold", f, f"n={n}: f_{n} is threshold with a=({weights}), b={cert.threshold}")
                )
        if n == 3 and f != paper_fixture("f3"):
            violations.append(violation("reference-f3", f, "tables differ from the reference formulas"))
        if n == 2 and f != paper_fixture("f2"):
            violations.append(violation("reference-f2", f, "tables differ from the reference formulas"))
        details[f"n={n}"] = row
    return len(p["n"]), violations, details


def _matrix_text(m) -> list[str]:
    return ["".join("T" if v else "." for v in row) for row in m]


@_register("table1", {"n": list(range(3, 11)), "samples": 0, "seed": 0}, (3, 16))
def _table1(p):
    violations = []
    details = {}
    for n in p["n"]:
        f = build_family(n).network
        computed = dependency_at(f, z_config(n).bits)
        reference = np.array([[table1_predicate(n, i, j) for j in range(1, n + 1)] for i in range(1, n + 1)])
        cells = [(i + 1, j + 1) for i, j in zip(*np.nonzero(computed != reference))]
        details[f"n={n}"] = {
            "computed": _matrix_text(computed),
            "reference": _matrix_text(reference),
            "mismatches": [list(c) for c in cells],
        }
        if cells:
            text = "; ".join(
                f"(i={i}, j={j}): computed {bool(computed[i - 1, j - 1])}, reference {bool(reference[i - 1, j - 1])}"
                for i, j in cells
            )
            violations.append(violation("table-cell", f, f"n={n}: {text}"))
    return len(p["n"]), violations, details


@_register("nonthreshold", {"n": list(range(4, 11)), "samples": 0, "seed": 0}, (2, 12))
def _nonthreshold(p):
    violations = []
    details = {}
    for n in p["n"]:
        f = build_family(n).network
        last = f.locals[-1]
        cert = threshold_feasibility(last)
        row = {
            "threshold": cert.feasible,
            "threshold_local_functions": [j for j in range(1, n + 1) if threshold_feasibility(f.locals[j - 1]).feasible],
        }
        if cert.feasible:
            row["weights"] = [str(w) for w in cert.weights]
            row["b"] = str(cert.threshold)
            row["certificate_verified"] = cert.verify(last)
            violations.append(
                violation("non-threshold", f, f"n={n}: f_{n} >= {cert.threshold} with a=({', '.join(row['weights'])})")
            )
        if n <= 8:
            row["assumability_violation_k3"] = assumability_violation(last, 3)
        details[f"n={n}"] = row
    return len(p["n"]), violations, details


@_register("realize", {"n": list(range(1, 7)), "samples": 5, "seed": 0}, (1, 8))
def _realize(p):
    violations = []
    instances = 0
    details = {}
    for n in p["n"]:
        size = 1 << n
        for period in range(1, size + 1):
            g = realize_hamiltonian(n, period)
            s = analyze(transition_graph(g))
            instances += 1
            if s.period != period or s.height != size - period or not unate_analysis(g).is_unate:
                violations.append(
                    violation("realize-hamiltonian", g, f"n={n}, p={period}: period {s.period}, height {s.height}")
                )
        if n >= 2:
            for variant in (Variant.H_OR_C, Variant.H_AND_D):
                h = build_family(n, variant).network
                instances += 1
                if not unate_analysis(h).is_unate:
                    violations.append(violation(f"unate-{variant.value}", h, f"n={n}"))
        if n > 5:
            continue
        targets = [("f", transition_graph(build_family(n).network)), ("fig11-lift", FunctionalGraph(ensembles.fig11_lift(n), n))]
        if n >= 2:
            targets.insert(1, ("h", transition_graph(build_family(n, Variant.H).network)))
        for idx in range(p["samples"]):
            rng = ensembles.instance_rng(p["seed"], n, idx)
            targets.append((f"random-{idx}", FunctionalGraph(ensembles.two_hamiltonian_map(n, rng), n)))
        done = []
        for label, target in targets:
            instances += 1
            try:
                g = realize_two_hamiltonian(target)
            except ValueError as exc:
                violations.append(violation("realize-two-hamiltonian", BooleanNetwork.from_map(target.successor), f"n={n}, {label}: {exc}"))
                continue
            if not (unate_analysis(g).is_unate and isomorphic(transition_graph(g), target)):
                violations.append(violation("realize-two-hamiltonian", g, f"n={n}, {label}: output not unate or not isomorphic"))
            done.append(label)
        details[f"n={n}"] = {"periods": size, "two_hamiltonian_targets": done}
    return instances, violations, details


# cited bounds -------------------------------------------------------------------


def _monotone_tables(n: int) -> list[int]:
    out = []
    words = states(n)
    for code in range(1 << (1 << n)):
        t = (code >> words) & 1
        ok = all(np.all(t[words[((words >> i) & 1) == 0]] <= t[words[((words >> i) & 1) == 0] | (1 << i)]) for i in range(n))
        if ok:
            out.append(code)
    return out


@_register("sperner-bound", {"n": [3], "samples": 0, "seed": 0}, (1, 3))
def _sperner(p):
    from math import comb

    violations = []
    instances = 0
    details = {}
    for n in p["n"]:
        size = 1 << n
        bound = comb(n, n // 2)
        mono = _monotone_tables(n)
        words = states(n)
        cols = [((code >> words) & 1).astype(np.int64) for code in mono]
        hist: dict[int, int] = {}
        for combo in itertools.product(range(len(mono)), repeat=n):
            succ = np.zeros(size, dtype=np.int64)
            for j, k in enumerate(combo):
                succ |= cols[k] << j
            s = analyze(FunctionalGraph(succ, n))
            longest = max(len(c) for c in s.attractors)
            hist[longest] = hist.get(longest, 0) + 1
            instances += 1
            if longest > bound:
                violations.append(violation("sperner", succ, f"n={n}: limit cycle of length {longest} > {bound}"))
        details[f"n={n}"] = {"monotone_functions": len(mono), "bound": bound, "longest_cycle_histogram": dict(sorted(hist.items()))}
    return instances, violations, details


def _clause_maps(n: int, conjunctive: bool) -> np.ndarray:
    """State maps of every AND (or OR) network over positive literals; an empty AND is 1, an empty OR is 0."""
    size = 1 << n
    words = states(n)
    # value of the clause over subset S at every state
    if conjunctive:
        table = np.array([(words & s) == s for s in range(size)], dtype=np.int64)
    else:
        table = np.array([(words & s) != 0 for s in range(size)], dtype=np.int64)
    combos = np.array(list(itertools.product(range(size), repeat=n)), dtype=np.int64)
    maps = np.zeros((combos.shape[0], size), dtype=np.int64)
    for j in range(n):
        maps |= table[combos[:, j]] << j
    return maps


@_register("conj-height-bound", {"n": [1, 2, 3, 4], "samples": 0, "seed": 0}, (1, 4))
def _conj_height(p):
    violations = []
    instances = 0
    details = {}
    for n in p["n"]:
        bound = 2 * n * n - 3 * n + 2
        row = {"bound": bound}
        for kind, conj in (("conjunctive", True), ("disjunctive", False)):
            maps = _clause_maps(n, conj)
            heights = sweep.heights(maps, n)
            instances += maps.shape[0]
            worst = int(heights.max())
            row[f"{kind}_networks"] = int(maps.shape[0])
            row[f"{kind}_max_height"] = worst
            for r in np.flatnonzero(heights > bound)[:3]:
                violations.append(violation("height-bound", maps[r], f"n={n}: {kind} height {int(heights[r])} > {bound}"))
        details[f"n={n}"] = row
    return instances, violations, details


# self-duality conjecture ------------------------------------------------------------


@_register(
    "conjecture-selfdual-necessary",
    {"n": [2, 3, 4], "samples": 200, "seed": 0},
    (1, 5),
    max_samples=100_000,
    conjecture=True,
)
def _selfdual_conjecture(p):
    """Unate Hamiltonian cycles that are not self-dual in ``[n]``.

    Exhaustive over all ``(2**n - 1)!`` cycles for ``n <= 3``. For larger
    ``n``, ``samples`` random cycles plus ``samples`` annealing restarts
    aimed at unate cycles.
    """
    violations = []
    instances = 0
    details = {}
    for n in p["n"]:
        size = 1 << n
        full = list(range(1, n + 1))
        candidates = []
        if n <= 3:
            for perm in itertools.permutations(range(1, size)):
                candidates.append(ensembles.cycle_map((0,) + perm))
            mode = "exhaustive"
        else:
            for idx in range(p["samples"]):
                candidates.append(ensembles.cyclic_permutation(n, ensembles.instance_rng(p["seed"], n, idx)))
            found = np.zeros((p["samples"] + 1, size), dtype=np.int64)
            count = sweep.anneal_unate_cycles(n, p["seed"], p["samples"], 20_000, 2.0, found, p["samples"] + 1)
            candidates.extend(found[:count])
            mode = "sampled+annealing"
        unate_cycles = 0
        not_self_dual = 0
        seen = set()
        for succ in candidates:
            key = succ.tobytes()
            if key in seen:
                continue
            seen.add(key)
            instances += 1
            f = BooleanNetwork.from_map(succ)
            if not unate_analysis(f).is_unate:
                continue
            unate_cycles += 1
            if not is_self_dual(f, full):
                not_self_dual += 1
                if not_self_dual <= 5:
                    violations.append(violation("selfdual-necessary", f, f"n={n}: unate Hamiltonian cycle not self-dual in [n]"))
        details[f"n={n}"] = {
            "mode": mode,
            "distinct_cycles_checked": len(seen),
            "unate_cycles": unate_cycles,
            "not_self_dual": not_self_dual,
        }
    return instances, violations, details


SUITE_NAMES = tuple(SUITES)
