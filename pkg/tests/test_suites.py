import json

import numpy as np
import pytest

from hambn import (
    FunctionalGraph,
    Kind,
    analyze,
    classify,
    isomorphic,
    load_network,
    threshold_feasibility,
    unate_analysis,
)
from hambn import ensembles, suites, sweep
from hambn.construction import fig11_graph

CONJECTURES = [name for name, s in suites.SUITES.items() if s.conjecture]


def test_catalog_is_complete():
    assert set(suites.SUITES) == {
        "odd-indegree", "unique-garden", "subnetwork-cycle", "hamiltonian-connected",
        "strong-connectivity", "period-height-sum", "selfdual-iterates", "selfdual-indegree",
        "n2-signed-cycle", "family", "table1", "nonthreshold", "realize", "sperner-bound",
        "conj-height-bound", "conjecture-tournament", "conjecture-selfdual-necessary",
    }
    assert set(CONJECTURES) == {"conjecture-tournament", "conjecture-selfdual-necessary"}


def test_unknown_suite_and_caps():
    with pytest.raises(suites.SuiteError):
        suites.run_suite("nope")
    with pytest.raises(suites.SuiteError):
        suites.run_suite("odd-indegree", {"n": 9})
    with pytest.raises(suites.SuiteError):
        suites.run_suite("realize", {"samples": 10**9})
    with pytest.raises(suites.SuiteError):
        suites.run_suite("family", {"bogus": 1})


def test_n2_signed_cycle():
    r = suites.run_suite("n2-signed-cycle")
    assert r.instances_checked == 256 and r.verdict == "pass"
    assert r.details["unate_hamiltonian_cycles"] == 2


def test_report_json_shape():
    r = suites.run_suite("n2-signed-cycle")
    d = json.loads(r.to_json())
    for key in suites.REPORT_SCHEMA["required"]:
        assert key in d
    assert d["verdict"] in suites.REPORT_SCHEMA["properties"]["verdict"]["enum"]
    assert isinstance(d["elapsed_ms"], float) and d["elapsed_ms"] >= 0
    assert "verdict" in r.table()


def test_reports_are_reproducible():
    a = suites.run_suite("selfdual-iterates", {"n": [3, 4], "samples": 20, "seed": 7})
    b = suites.run_suite("selfdual-iterates", {"n": [3, 4], "samples": 20, "seed": 7})
    assert a.fingerprint() == b.fingerprint()
    c = suites.run_suite("odd-indegree", {"n": [4], "samples": 200, "seed": 3})
    d = suites.run_suite("odd-indegree", {"n": [4], "samples": 200, "seed": 3})
    assert c.fingerprint() == d.fingerprint()


def test_sharded_sweep_matches_single_pass():
    whole = sweep.exhaustive_n3(0, 40_000)
    parts = sweep.merge([sweep.exhaustive_n3(0, 15_000), sweep.exhaustive_n3(15_000, 40_000)])
    assert whole == parts


def test_pass_means_no_violations():
    for name in ("selfdual-indegree", "realize", "sperner-bound"):
        r = suites.run_suite(name, {"n": 3} if name != "sperner-bound" else None)
        assert r.verdict == "pass" and r.violations == []


def test_failing_reports_replay():
    # every counterexample in a failing report reproduces when reloaded
    r = suites.run_suite("nonthreshold", {"n": [4, 5, 6]})
    assert r.verdict == "fail"
    for v in r.violations:
        f = load_network(v["network"])
        assert threshold_feasibility(f.locals[-1]).feasible


def test_table1_report_is_per_cell_and_deterministic():
    a = suites.run_suite("table1")
    b = suites.run_suite("table1")
    assert a.fingerprint() == b.fingerprint()
    for n in range(3, 11):
        assert a.details[f"n={n}"]["mismatches"] == [[1, 1]]


def test_conjecture_firewall():
    r = suites.run_suite("conjecture-tournament", {"n": [4], "samples": 50})
    assert r.verdict in ("refuted-conjecture", "inconclusive")


def test_selfdual_conjecture_refuted_at_four():
    r = suites.run_suite("conjecture-selfdual-necessary", {"n": [2, 4], "samples": 30})
    assert r.verdict == "refuted-conjecture"
    assert r.details["n=2"]["not_self_dual"] == 0
    f = load_network(r.violations[0]["network"])
    assert unate_analysis(f).is_unate
    assert classify(FunctionalGraph(f.successor, 4)).kind is Kind.HAMILTONIAN_CYCLE


def test_selfdual_conjecture_holds_exhaustively_at_three():
    r = suites.run_suite("conjecture-selfdual-necessary", {"n": [3]})
    assert r.verdict == "inconclusive"
    assert r.details["n=3"] == {
        "mode": "exhaustive", "distinct_cycles_checked": 5040, "unate_cycles": 48, "not_self_dual": 0,
    }


def test_generators_produce_the_intended_shapes(rng):
    for n in (3, 4, 5):
        assert classify(FunctionalGraph(ensembles.cyclic_permutation(n, rng), n)).kind is Kind.HAMILTONIAN_CYCLE
        assert classify(FunctionalGraph(ensembles.quasi_map(n, rng), n)).kind is Kind.QUASI_HAMILTONIAN
        assert len(analyze(FunctionalGraph(ensembles.unique_garden_map(n, rng), n)).gardens) == 1
        for p in (1, 3, 1 << n):
            s = analyze(FunctionalGraph(ensembles.rho_map(n, rng, p), n))
            assert (s.period, s.height) == (p, (1 << n) - p)
        mask = 0b101
        inner = ensembles.cyclic_permutation(2, rng)
        succ = ensembles.closed_subset_map(n, rng, mask, inner)
        for x in range(1 << n):
            proj = (x & 1) | ((x >> 2) & 1) << 1
            image = succ[x]
            assert ((image & 1) | ((image >> 2) & 1) << 1) == inner[proj]
    assert isomorphic(FunctionalGraph(ensembles.fig11_lift(3), 3), fig11_graph())


def test_instance_streams_are_independent_of_order():
    a = ensembles.uniform_map(4, ensembles.instance_rng(1, 4, 10))
    ensembles.uniform_map(4, ensembles.instance_rng(1, 4, 9))
    b = ensembles.uniform_map(4, ensembles.instance_rng(1, 4, 10))
    assert np.array_equal(a, b)


@pytest.mark.slow
def test_exhaustive_odd_indegree():
    r = suites.run_suite("odd-indegree", {"n": [3]})
    assert r.instances_checked == 16_777_216 and r.verdict == "pass"
