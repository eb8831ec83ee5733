import random
from fractions import Fraction
from itertools import permutations

import pytest

from colorbias.constructions import (
    build_counterexample_2,
    build_general_r,
    build_tripartite_3,
)
from colorbias.errors import (
    BudgetExceeded,
    InvalidCycle,
    NoExtensionFound,
    NotALinearForest,
    NotHamiltonian,
)
from colorbias.graph import ColoredGraph, relabel_colors
from colorbias.hamilton import (
    PathSystem,
    bias_spectrum,
    canonical_cycle,
    color_bias,
    enumerate_hamilton_cycles,
    extend_to_hamilton,
    has_hamilton_cycle,
)

from oracles import (
    brute_hamilton_cycles,
    check_cycle_independently,
    dense_graph_with_min_degree,
    random_colored_graph,
    random_linear_forest,
)


def complete_graph(n, r=1, color=1):
    return ColoredGraph(n, r, [(u, v, color) for u in range(n) for v in range(u + 1, n)])


def cycle_graph(n, colors=None):
    colors = colors or [1] * n
    r = max(colors)
    edges = [(i, (i + 1) % n, colors[i]) for i in range(n)]
    return ColoredGraph(n, r, [(min(u, v), max(u, v), c) for u, v, c in edges])


def test_five_cycle_has_one_hamilton_cycle():
    cycles = list(enumerate_hamilton_cycles(cycle_graph(5)))
    assert len(cycles) == 1
    assert cycles[0].vertices == (0, 1, 2, 3, 4)


def test_k5_has_twelve_cycles():
    cycles = list(enumerate_hamilton_cycles(complete_graph(5)))
    assert len(cycles) == 12  # (5-1)!/2


def test_enumeration_matches_permutation_oracle():
    rng = random.Random(21)
    for _ in range(40):
        n = rng.randint(3, 7)
        g = random_colored_graph(rng, n, 2, rng.uniform(0.3, 0.9))
        got = {h.vertices for h in enumerate_hamilton_cycles(g)}
        assert got == brute_hamilton_cycles(g)


def test_enumeration_is_canonical_and_deterministic():
    g, _ = build_general_r(8, 2)
    first = list(enumerate_hamilton_cycles(g, cap=50))
    second = list(enumerate_hamilton_cycles(g, cap=50))
    assert [h.vertices for h in first] == [h.vertices for h in second]
    for h in first:
        check_cycle_independently(g, h)


def test_cap_limits_the_stream():
    assert len(list(enumerate_hamilton_cycles(complete_graph(6), cap=3))) == 3


def test_enumeration_rejects_tiny_graphs():
    with pytest.raises(ValueError):
        list(enumerate_hamilton_cycles(ColoredGraph(2, 1, [(0, 1, 1)])))


def test_color_bias_balanced():
    g, _ = build_general_r(8, 2)
    h = next(enumerate_hamilton_cycles(g))
    report = color_bias(g, h)
    assert report.color_counts == (4, 4)
    assert report.scaled_bias == 0 and report.bias == 0


def test_color_bias_monochromatic_six_cycle():
    g = cycle_graph(6)
    g = ColoredGraph(6, 2, [(u, v, c) for u, v, c in g.edges()])  # widen to r=2
    h = next(enumerate_hamilton_cycles(g))
    report = color_bias(g, h)
    assert report.color_counts == (6, 0)
    assert report.scaled_bias == 6
    assert report.bias == Fraction(3)


def test_color_bias_fractional():
    # 8-cycle colored 1,1,1,2,2,2,3,3 around the loop: counts (3,3,2)
    g = cycle_graph(8, [1, 1, 1, 2, 2, 2, 3, 3])
    h = next(enumerate_hamilton_cycles(g))
    report = color_bias(g, h)
    assert sorted(report.color_counts) == [2, 3, 3]
    assert report.scaled_bias == 2
    assert report.bias == Fraction(2, 3)


def test_color_bias_rejects_foreign_cycle():
    g, _ = build_general_r(8, 2)
    with pytest.raises(InvalidCycle):
        canonical_cycle(cycle_graph(5), (0, 1, 2, 3))
    # the first canonical cycle of K8 uses edges missing from the construction
    with pytest.raises(InvalidCycle):
        color_bias(g, next(enumerate_hamilton_cycles(complete_graph(8, r=2), cap=1)))


def test_bias_invariant_under_color_relabeling():
    rng = random.Random(3)
    g = random_colored_graph(rng, 7, 3, 0.8)
    cycles = list(enumerate_hamilton_cycles(g, cap=5))
    if not cycles:
        pytest.skip("sample graph had no Hamilton cycle")
    for perm in permutations(range(1, 4)):
        mapping = {i + 1: perm[i] for i in range(3)}
        g2 = relabel_colors(g, mapping)
        for h in cycles:
            h2 = canonical_cycle(g2, h.vertices)
            assert color_bias(g, h).scaled_bias == color_bias(g2, h2).scaled_bias
            counts2 = [0] * 3
            for k in range(1, 4):
                counts2[mapping[k] - 1] = h.color_counts[k - 1]
            assert h2.color_counts == tuple(counts2)


def test_bias_spectrum_on_constructions():
    g, _ = build_general_r(8, 2)
    spec = bias_spectrum(g)
    assert (spec.min_scaled, spec.max_scaled) == (0, 0)
    assert spec.cycle_count == 1800
    g3, _ = build_tripartite_3(9)
    spec3 = bias_spectrum(g3)
    assert (spec3.min_scaled, spec3.max_scaled) == (0, 0)
    assert spec3.min_color_counts == (3, 3, 3) == spec3.max_color_counts
    gc, _ = build_counterexample_2(10, 2)
    specc = bias_spectrum(gc)
    assert specc.max_scaled <= 2  # r*t/2
    assert all(c >= 4 for c in specc.min_color_counts)  # (n-t)/2


def test_bias_spectrum_counts_match_enumeration():
    rng = random.Random(8)
    for _ in range(20):
        g = random_colored_graph(rng, rng.randint(3, 7), 2, 0.7)
        try:
            spec = bias_spectrum(g)
        except NotHamiltonian:
            assert not list(enumerate_hamilton_cycles(g))
            continue
        cycles = list(enumerate_hamilton_cycles(g))
        assert spec.cycle_count == len(cycles)
        scaled = [
            max(abs(g.r * c - g.n) for c in h.color_counts) for h in cycles
        ]
        assert spec.min_scaled == min(scaled)
        assert spec.max_scaled == max(scaled)


def test_kernel_agrees_with_pure_enumeration_at_larger_sizes():
    rng = random.Random(55)
    for _ in range(6):
        g = random_colored_graph(rng, rng.randint(9, 10), rng.randint(2, 4), 0.6)
        cycles = list(enumerate_hamilton_cycles(g))
        if not cycles:
            with pytest.raises(NotHamiltonian):
                bias_spectrum(g)
            continue
        spec = bias_spectrum(g)
        scaled = [max(abs(g.r * c - g.n) for c in h.color_counts) for h in cycles]
        assert spec.cycle_count == len(cycles)
        assert (spec.min_scaled, spec.max_scaled) == (min(scaled), max(scaled))
        for k in range(g.r):
            counts_k = [h.color_counts[k] for h in cycles]
            assert spec.min_color_counts[k] == min(counts_k)
            assert spec.max_color_counts[k] == max(counts_k)


def test_extension_complete_on_sparse_graphs():
    # extend_to_hamilton must agree with an exhaustive containment oracle
    rng = random.Random(77)
    for _ in range(150):
        n = rng.randint(4, 8)
        g = random_colored_graph(rng, n, 1, rng.uniform(0.25, 0.6))
        forest = random_linear_forest(rng, g, rng.randint(1, 3))
        want = set(tuple(sorted(e)) for e in forest)
        possible = any(
            want <= set(h.edges()) for h in enumerate_hamilton_cycles(g)
        ) if n >= 3 else False
        try:
            h = extend_to_hamilton(g, forest)
            assert possible, "extension returned a cycle where none should exist"
            assert want <= set(h.edges())
            check_cycle_independently(g, h)
        except NoExtensionFound:
            assert not possible, "extension missed an existing cycle"


def test_bias_spectrum_budget_guard():
    with pytest.raises(BudgetExceeded):
        bias_spectrum(complete_graph(10), node_budget=50)


def test_bias_spectrum_not_hamiltonian():
    path = ColoredGraph(4, 1, [(0, 1, 1), (1, 2, 1), (2, 3, 1)])
    with pytest.raises(NotHamiltonian):
        bias_spectrum(path)
    with pytest.raises(NotHamiltonian):
        bias_spectrum(ColoredGraph(2, 1, [(0, 1, 1)]))


def test_has_hamilton_cycle_matches_enumeration():
    rng = random.Random(31)
    for _ in range(60):
        g = random_colored_graph(rng, rng.randint(3, 8), 1, rng.uniform(0.2, 0.8))
        assert has_hamilton_cycle(g) == bool(list(enumerate_hamilton_cycles(g, cap=1)))


def test_extend_through_single_edge():
    g = complete_graph(6)
    h = extend_to_hamilton(g, [(0, 1)])
    assert (0, 1) in h.edges()
    check_cycle_independently(g, h)


def test_extend_unique_cycle():
    g = cycle_graph(5)
    h = extend_to_hamilton(g, [(0, 1), (1, 2), (2, 3)])
    assert h.vertices == (0, 1, 2, 3, 4)


def test_extend_two_disjoint_edges():
    g = complete_graph(6)
    h = extend_to_hamilton(g, [(0, 1), (2, 3)])
    assert {(0, 1), (2, 3)} <= set(h.edges())


def test_extend_whole_path_system():
    g = complete_graph(8)
    forest = PathSystem.in_graph(g, [(0, 1), (1, 2), (4, 5)])
    h = extend_to_hamilton(g, forest)
    assert {(0, 1), (1, 2), (4, 5)} <= set(h.edges())


def test_extend_rejects_bad_systems():
    g = complete_graph(6)
    with pytest.raises(NotALinearForest):
        extend_to_hamilton(g, [(0, 1), (1, 2), (0, 2)])  # triangle
    with pytest.raises(NotALinearForest):
        extend_to_hamilton(g, [(0, 1), (0, 2), (0, 3)])  # degree 3
    sparse = cycle_graph(5)
    with pytest.raises(NotALinearForest):
        extend_to_hamilton(sparse, [(0, 2)])  # not an edge


def test_extend_reports_impossible_inputs():
    star = ColoredGraph(4, 1, [(0, 1, 1), (0, 2, 1), (0, 3, 1)])
    with pytest.raises(NoExtensionFound):
        extend_to_hamilton(star, [])


def test_extend_random_graphs_under_degree_hypothesis():
    rng = random.Random(17)
    for _ in range(60):
        n = rng.randint(6, 12)
        c = rng.randint(1, min(4, n - 3))  # keep the degree floor below n
        g = dense_graph_with_min_degree(rng, n, (n + c + 1 + 1) // 2)
        forest = random_linear_forest(rng, g, c)
        h = extend_to_hamilton(g, forest)
        assert set(tuple(sorted(e)) for e in forest) <= set(h.edges())
        check_cycle_independently(g, h)
