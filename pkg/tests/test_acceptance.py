"""Acceptance gate: the nine primary criteria, each at its stated tolerance and time budget.

Every test prints one ``CRITERION k: PASS|FAIL`` line; the lines are also
collected into the pytest terminal summary. Run directly with
``python3 tests/test_acceptance.py`` for the lines alone.
"""

import time

import numpy as np
import pytest

from hambn import (
    BooleanNetwork,
    Configuration,
    Kind,
    analyze,
    classify,
    connectivity,
    interaction_graph,
    load_network,
    local_interaction_graph,
    paper_fixture,
    run_suite,
    serialize_network,
    transition_graph,
)
from hambn.construction import FIXTURE_IDS
from hambn.interaction import Connectivity

RESULTS: dict[int, str] = {}


def w(s):
    return Configuration.parse(s).bits


def record(k, title, checks, elapsed, budget):
    """Store and print the verdict line, then fail on the first broken check."""
    failed = [name for name, ok in checks if not ok]
    in_time = elapsed <= budget
    ok = not failed and in_time
    note = f"{elapsed:.2f}s / budget {budget:g}s"
    if failed:
        note += "; failed: " + "; ".join(failed)
    if not in_time:
        note += "; over time budget"
    line = f"CRITERION {k}: {'PASS' if ok else 'FAIL'}  {title}  ({note})"
    RESULTS[k] = line
    print(line)
    assert not failed, "; ".join(failed)
    assert in_time, f"took {elapsed:.2f}s, budget {budget}s"


def test_criterion_1_fixtures():
    t0 = time.perf_counter()
    checks = []
    ex1 = paper_fixture("ex1")
    s = analyze(transition_graph(ex1))
    checks.append(("ex1 height 3", s.height == 3))
    checks.append(("ex1 period 2", s.period == 2))
    checks.append(("ex1 gardens", sorted(s.gardens) == sorted([w("100"), w("101")])))
    checks.append(("ex1 fixed points", sorted(s.fixed_points) == sorted([w("000"), w("111")])))
    g = interaction_graph(ex1)
    checks.append(("ex1 G(f)", g.arc_set() == {(1, 1), (1, 2), (2, 1), (2, 2), (3, 1), (3, 2), (3, 3)}))
    gl = local_interaction_graph(ex1, Configuration.parse("110"))
    checks.append(("ex1 local graph at 110", gl.arc_set() == {(1, 2), (2, 1), (3, 1), (3, 3)}))

    g2 = transition_graph(paper_fixture("ex2"))
    s2 = analyze(g2)
    checks.append(("ex2 max height", classify(g2).kind is Kind.MAX_HEIGHT))
    checks.append(("ex2 height 7, fixed point 010", s2.height == 7 and s2.fixed_points == [w("010")]))

    checks.append(("ex3 intermediate(4)", str(classify(transition_graph(paper_fixture("ex3")))) == "intermediate(4)"))

    g4 = transition_graph(paper_fixture("ex4"))
    order = ["000", "101", "011", "110", "010", "100", "001", "111"]
    follows = all(g4.successor[w(a)] == w(b) for a, b in zip(order, order[1:] + order[:1]))
    checks.append(("ex4 cycle order", classify(g4).kind is Kind.HAMILTONIAN_CYCLE and follows))

    checks.append(("quasi3", classify(transition_graph(paper_fixture("quasi3"))).kind is Kind.QUASI_HAMILTONIAN))
    record(1, "fixtures reproduce the reference facts", checks, time.perf_counter() - t0, 1.0)


def test_criterion_2_bridoux():
    t0 = time.perf_counter()
    f = paper_fixture("bridoux5")
    cls = classify(transition_graph(f))
    s = analyze(transition_graph(f))
    g = interaction_graph(f)
    checks = [
        ("hamiltonian cycle of length 32", cls.kind is Kind.HAMILTONIAN_CYCLE and s.period == 32),
        ("max in-degree <= 4", max(g.in_degree(j) for j in range(1, 6)) <= 4),
    ]
    record(2, "five-variable Hamiltonian cycle without a full in-degree", checks, time.perf_counter() - t0, 1.0)


def test_criterion_3_family():
    t0 = time.perf_counter()
    r = run_suite("family", {"n": list(range(1, 13))})
    checks = [("12 instances", r.instances_checked == 12)]
    checks += [(v["note"] if v.get("note") else v["check"], False) for v in r.violations]
    checks.append(("suite verdict is pass", r.verdict == "pass"))
    record(3, "family f^[n], n = 1..12", checks, time.perf_counter() - t0, 30.0)


def test_criterion_4_selfduality():
    t0 = time.perf_counter()
    r = run_suite("selfdual-iterates", {"n": list(range(1, 9)), "samples": 60, "seed": 0})
    checks = [
        ("suite verdict is pass", r.verdict == "pass"),
        ("both directions exercised", r.details["self_dual"] > 0 and r.details["controls"] > r.details["controls_self_dual"]),
        ("signed local graphs compared", r.details["local_graph_checks"] > 0),
    ]
    record(4, "self-duality laws on Hamiltonian cycles, n <= 8", checks, time.perf_counter() - t0, 30.0)


def test_criterion_5_exhaustive_sweep():
    t0 = time.perf_counter()
    names = ["odd-indegree", "unique-garden", "hamiltonian-connected", "strong-connectivity", "period-height-sum"]
    checks = []
    for name in names:
        r = run_suite(name, {"n": [3]})
        checks.append((f"{name}: {r.instances_checked} instances", r.instances_checked == 1 << 24))
        checks.append((f"{name}: verdict", r.verdict == "pass"))
        checks.append((f"{name}: premise met", next(iter(r.details.values()))["premise_holds"] > 0))
    record(5, "exhaustive sweep of all 2^24 three-variable networks", checks, time.perf_counter() - t0, 600.0)


def test_criterion_6_realization():
    t0 = time.perf_counter()
    r = run_suite("realize", {"n": list(range(1, 7)), "samples": 5, "seed": 0})
    checks = [(v["note"], False) for v in r.violations]
    checks.append(("suite verdict is pass", r.verdict == "pass"))
    for n in range(2, 6):
        done = r.details[f"n={n}"]["two_hamiltonian_targets"]
        checks.append((f"n={n} targets f, h, lifted shape", {"f", "h", "fig11-lift"} <= set(done)))
    record(6, "realization of every period and of 2-Hamiltonian shapes", checks, time.perf_counter() - t0, 120.0)


def test_criterion_7_bounds():
    t0 = time.perf_counter()
    sp = run_suite("sperner-bound")
    ch = run_suite("conj-height-bound", {"n": [1, 2, 3, 4]})
    checks = [
        ("8000 monotone networks", sp.instances_checked == 8000),
        ("longest cycle <= 3", sp.verdict == "pass"),
        ("conjunctive heights within 2n^2-3n+2", ch.verdict == "pass"),
    ]
    record(7, "cited bounds on monotone and conjunctive networks", checks, time.perf_counter() - t0, 60.0)


def test_criterion_8_table():
    t0 = time.perf_counter()
    a = run_suite("table1")
    b = run_suite("table1")
    agree = a.verdict == "pass"
    per_cell = all(f"n={n}" in a.details and "mismatches" in a.details[f"n={n}"] for n in range(3, 11))
    checks = [
        ("agreement or per-cell report", agree or (per_cell and all("(i=" in v["note"] for v in a.violations))),
        ("deterministic", a.fingerprint() == b.fingerprint()),
    ]
    record(8, "dependency table at the anchor, n = 3..10", checks, time.perf_counter() - t0, 10.0)


def test_criterion_9_roundtrip():
    t0 = time.perf_counter()
    rng = np.random.default_rng(2024)
    bad = []
    for name in FIXTURE_IDS:
        f = paper_fixture(name)
        if load_network(serialize_network(f, "table")) != f:
            bad.append(name)
    for k in range(1000):
        n = int(rng.integers(1, 9))
        f = BooleanNetwork.from_map(rng.integers(0, 1 << n, size=1 << n))
        text = serialize_network(f, "table")
        g = load_network(text)
        if g != f or serialize_network(g, "table") != text:
            bad.append(f"random #{k}")
    checks = [(f"round trip {b}", False) for b in bad] or [("round trip", True)]
    record(9, "parse and serialize are inverse", checks, time.perf_counter() - t0, 10.0)


def test_quasi_fixture_is_strong():
    # criterion 1 companion: the strong-connectivity theorem on the quasi example
    assert connectivity(interaction_graph(paper_fixture("quasi3"))) is Connectivity.STRONG


if __name__ == "__main__":
    import sys

    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn()
            except AssertionError:
                pass
    sys.exit(0 if all("PASS" in line for line in RESULTS.values()) else 1)
