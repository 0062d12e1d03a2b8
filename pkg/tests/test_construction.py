import numpy as np
import pytest
from conftest import brute_isomorphic, brute_unate

from hambn import (
    BooleanNetwork,
    Configuration,
    FunctionalGraph,
    Kind,
    Variant,
    analyze,
    build_family,
    classify,
    fixture_source,
    interaction_graph,
    is_self_dual,
    isomorphic,
    paper_fixture,
    realize_hamiltonian,
    realize_two_hamiltonian,
    table1_predicate,
    transition_graph,
    unate_analysis,
    z_config,
)
from hambn.construction import (
    BRIDOUX5_GOLDEN,
    FIXTURE_IDS,
    Clause,
    ClauseKind,
    UnrealizableError,
    dependency_at,
    family_successor,
    fig11_graph,
    k_of,
    oscillating,
)
from hambn.formats import hex_table

C = Configuration.parse


def test_oscillating_words():
    assert str(oscillating(3, 0)) == "010"
    assert str(oscillating(1, 1)) == "1"
    assert str(oscillating(4, 1)) == "1010"


@pytest.mark.parametrize("n, z", [(2, "10"), (3, "010"), (4, "1010"), (5, "01010")])
def test_anchor(n, z):
    assert str(z_config(n)) == z


def test_anchor_recurrence():
    # z^[n+1] = (complement of z^[n], 0)
    for n in range(2, 12):
        nxt = z_config(n + 1)
        assert nxt.tuple() == tuple(1 - b for b in z_config(n).tuple()) + (0,)
    with pytest.raises(ValueError):
        z_config(1)


def test_k_of():
    assert k_of(C("010")) == 3
    # x1 = x2 = 0 already breaks the alternation
    assert k_of(C("0011")) == 1
    assert k_of(C("0111")) == 2
    assert k_of(C("111")) == 1


def test_clauses():
    z = z_config(3)
    c = Clause(ClauseKind.CONJUNCTIVE, z, 3)
    d = Clause(ClauseKind.DISJUNCTIVE, z, 2)
    assert c.table(3).true_points().tolist() == [z.bits]
    assert c(z) == 1 and d(z) == 0
    assert d.table(3).true_count == 6


def test_small_family_members():
    f2 = build_family(2).network
    assert f2 == paper_fixture("f2")
    assert build_family(3).network == paper_fixture("f3")
    assert build_family(1).network.successor.tolist() == [1, 0]


def test_auxiliary_network_three():
    h = build_family(3, Variant.H).network
    # h^[3] = (not x2, x1, x3)
    expected = []
    for w in range(8):
        x1, x2, x3 = Configuration(w, 3).tuple()
        expected.append(Configuration.from_bits([1 - x2, x1, x3]).bits)
    assert h == BooleanNetwork.from_map(expected)
    s = analyze(transition_graph(h))
    assert sorted(len(c) for c in s.limit_cycles) == [4, 4]


def test_family_properties_up_to_twelve():
    for n in range(1, 13):
        f = build_family(n).network
        g = transition_graph(f)
        assert classify(g).kind is Kind.HAMILTONIAN_CYCLE
        assert is_self_dual(f, range(1, n + 1))
        assert unate_analysis(f).is_unate
        if n != 2:
            assert len(interaction_graph(f).arc_set()) == n * n


def test_family_against_brute_unate():
    for n in range(2, 7):
        f = build_family(n).network
        assert brute_unate(f.successor.tolist(), n) is not None


def test_family_lifts_lower_member():
    # first n - 1 coordinates of f^[n] follow f^[n-1] away from the two anchors
    for n in range(3, 9):
        lo = build_family(n - 1).network.successor
        hi = build_family(n).network.successor
        size = 1 << (n - 1)
        z = z_config(n).bits
        zbar = z ^ ((1 << n) - 1)
        for x in range(1 << n):
            if x in (z, zbar):
                continue
            assert hi[x] & (size - 1) == lo[x & (size - 1)]


def test_variants_are_unate_and_intermediate():
    for n in range(2, 7):
        for v in (Variant.H_OR_C, Variant.H_AND_D):
            f = build_family(n, v).network
            assert unate_analysis(f).is_unate
            cls = classify(transition_graph(f))
            assert cls.kind is Kind.INTERMEDIATE and cls.cycle_length == 1 << (n - 1)
        h = build_family(n, Variant.H).network
        assert not classify(transition_graph(h)).is_hamiltonian


@pytest.mark.parametrize("n", range(1, 7))
def test_realize_every_period(n):
    size = 1 << n
    for p in range(1, size + 1):
        g = realize_hamiltonian(n, p)
        s = analyze(transition_graph(g))
        assert (s.period, s.height) == (p, size - p)
        assert unate_analysis(g).is_unate


def test_realize_examples():
    assert realize_hamiltonian(3, 8) == build_family(3).network
    g = realize_hamiltonian(3, 1)
    s = analyze(transition_graph(g))
    assert classify(transition_graph(g)).kind is Kind.MAX_HEIGHT
    assert s.fixed_points == [z_config(3).bits]
    cls = classify(transition_graph(realize_hamiltonian(3, 4)))
    assert str(cls) == "intermediate(4)"
    with pytest.raises(ValueError):
        realize_hamiltonian(3, 9)


def test_realize_two_hamiltonian_targets():
    for n in range(2, 6):
        for target in (
            transition_graph(build_family(n).network),
            transition_graph(build_family(n, Variant.H).network),
        ):
            g = realize_two_hamiltonian(target)
            assert unate_analysis(g).is_unate
            assert isomorphic(transition_graph(g), target)


def test_realize_fig11_shape():
    target = fig11_graph()
    g = realize_two_hamiltonian(target)
    assert unate_analysis(g).is_unate
    assert brute_isomorphic(transition_graph(g).successor.tolist(), target.successor.tolist())


def test_realize_two_hamiltonian_random(rng):
    from hambn import ensembles

    for n in range(2, 6):
        for _ in range(10):
            target = FunctionalGraph(ensembles.two_hamiltonian_map(n, rng), n)
            g = realize_two_hamiltonian(target)
            assert unate_analysis(g).is_unate and isomorphic(transition_graph(g), target)


def test_realize_two_hamiltonian_rejects_non_two_hamiltonian():
    with pytest.raises(UnrealizableError):
        realize_two_hamiltonian(FunctionalGraph([0, 0, 0, 0], 2))


def test_table1_predicate_examples():
    assert table1_predicate(4, 4, 1)
    assert table1_predicate(5, 2, 2)
    assert not table1_predicate(4, 1, 3)
    with pytest.raises(ValueError):
        table1_predicate(2, 1, 1)


def test_dependency_matrix_differs_only_at_first_diagonal_cell():
    for n in range(3, 11):
        f = build_family(n).network
        d = dependency_at(f, z_config(n).bits)
        table = np.array([[table1_predicate(n, i, j) for j in range(1, n + 1)] for i in range(1, n + 1)])
        assert [tuple(int(a) + 1 for a in c) for c in np.argwhere(d != table)] == [(1, 1)]


def test_fixture_registry():
    assert set(FIXTURE_IDS) >= {"ex1", "ex2", "ex3", "ex4", "quasi3", "f2", "f3", "bridoux5"}
    with pytest.raises(KeyError):
        fixture_source("nope")


def test_bridoux_golden_tables():
    f = paper_fixture("bridoux5")
    assert tuple(hex_table(t) for t in f.locals) == BRIDOUX5_GOLDEN
    g = interaction_graph(f)
    assert classify(transition_graph(f)).kind is Kind.HAMILTONIAN_CYCLE
    assert max(g.in_degree(j) for j in range(1, 6)) <= 4


def test_example_one_literal_formulas_disagree_with_its_dynamics():
    literal = analyze(transition_graph(paper_fixture("ex1-literal")))
    fixed = analyze(transition_graph(paper_fixture("ex1")))
    assert fixed.height == 3 and literal.height != 3
    assert paper_fixture("ex1").successor[C("110").bits] == C("010").bits


def _flip_pairs(n):
    for x in range(1 << n):
        for i in range(1, n + 1):
            yield x, i, x ^ (1 << (i - 1))


@pytest.mark.parametrize("n", range(2, 9))
def test_equal_prefix_length_preserves_other_coordinates(n):
    s = family_successor(n)
    for x, i, y in _flip_pairs(n):
        if k_of(Configuration(x, n)) == k_of(Configuration(y, n)):
            for j in range(1, n + 1):
                if j != i:
                    assert (s[x] >> (j - 1)) & 1 == (s[y] >> (j - 1)) & 1


@pytest.mark.parametrize("n", range(2, 9))
def test_short_prefixes_preserve_coordinate_j(n):
    # holds for i != j; the flipped coordinate itself may change
    s = family_successor(n)
    own_flips = 0
    for x, i, y in _flip_pairs(n):
        kx, ky = k_of(Configuration(x, n)), k_of(Configuration(y, n))
        for j in range(max(kx, ky) + 1, n + 1):
            same = (s[x] >> (j - 1)) & 1 == (s[y] >> (j - 1)) & 1
            if i != j:
                assert same
            else:
                own_flips += not same
    assert (own_flips > 0) == (n >= 3)


@pytest.mark.parametrize("n", range(2, 9))
def test_parity_of_flipped_index_predicts_value(n):
    # x_[k] is a prefix of the anchor or of its complement, since both alternate
    s = family_successor(n)
    zn = z_config(n).bits
    for x in range(1 << n):
        k = k_of(Configuration(x, n))
        mask = (1 << k) - 1
        on_anchor = (x & mask) == (zn & mask)
        assert on_anchor or (x & mask) == (~zn & mask)
        even_gives = 0 if on_anchor == (n % 2 == 0) else 1
        for j in range(1, k + 1):
            for p in range(j + 1, k + 1):
                got = (s[x ^ (1 << (p - 1))] >> (j - 1)) & 1
                assert got == (even_gives if p % 2 == 0 else 1 - even_gives)
