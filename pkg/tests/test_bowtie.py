import random
from itertools import product

import pytest

from colorbias.bowtie import (
    Bowtie,
    amplifier_swap,
    color_count_f,
    enumerate_bowties,
    greedy_disjoint_bad_packing,
    is_bad,
    strip_bad_bowties,
)
from colorbias.constructions import build_general_r, build_tripartite_3
from colorbias.errors import InvalidBowtie, NotDisjoint, NotKBad
from colorbias.graph import ColoredGraph

from oracles import brute_bowties, check_cycle_independently, random_colored_graph

B = Bowtie(0, 1, 2, 3, 4)
# edge slots in the order (v1v2, v1v3, v4v5, v1v4, v1v5, v2v3): the first
# three enter the count positively, the last three negatively
SLOTS = ((0, 1), (0, 2), (3, 4), (0, 3), (0, 4), (1, 2))


def bowtie_host(colors, r=None):
    """A 5-vertex graph that is exactly one bowtie with the given slot colors."""
    r = r or max(colors)
    return ColoredGraph(5, r, [(min(e), max(e), c) for e, c in zip(SLOTS, colors)])


def test_f_monochromatic_is_zero():
    g = bowtie_host([1] * 6, r=2)
    assert color_count_f(g, B, 1) == 0
    assert color_count_f(g, B, 2) == 0
    assert is_bad(g, B) == (False, None)


def test_f_extreme_values():
    g = bowtie_host([1, 1, 1, 2, 2, 2])
    assert color_count_f(g, B, 1) == 3
    assert color_count_f(g, B, 2) == -3
    assert is_bad(g, B) == (True, 1)


def test_f_rejects_non_bowties():
    g = ColoredGraph(5, 1, [(0, 1, 1)])
    with pytest.raises(InvalidBowtie):
        color_count_f(g, B, 1)
    full = bowtie_host([1] * 6)
    with pytest.raises(InvalidBowtie):
        color_count_f(full, Bowtie(0, 1, 1, 3, 4), 1)


def test_f_sums_to_zero_and_antisymmetry():
    rng = random.Random(11)
    for _ in range(300):
        r = rng.randint(1, 4)
        colors = [rng.randint(1, r) for _ in range(6)]
        g = bowtie_host(colors, r=r)
        values = [color_count_f(g, B, k) for k in range(1, r + 1)]
        assert sum(values) == 0
        assert all(-3 <= v <= 3 for v in values)
        flipped = B.swap_pairs()
        for k in range(1, r + 1):
            assert color_count_f(g, flipped, k) == -color_count_f(g, B, k)


def test_balanced_pattern_catalog_has_six_classes():
    """Enumerate all never-bad colorings up to symmetry and color renaming.

    A coloring is never bad iff every color class is balanced between the
    positive and negative slots, which depends only on the partition of the
    six slots into color classes.  The bowtie symmetry group (swap within
    either pair, swap the pairs) has order 8; exactly six balanced partition
    classes must survive the quotient.
    """
    swap23 = [1, 0, 2, 3, 4, 5]
    swap45 = [0, 1, 2, 4, 3, 5]
    swap_pairs = [3, 4, 5, 0, 1, 2]  # exchanges positive and negative slots

    def compose(p, q):
        return [p[q[i]] for i in range(6)]

    group = [list(range(6))]
    frontier = [swap23, swap45, swap_pairs]
    while frontier:
        g_ = frontier.pop()
        if g_ not in group:
            group.append(g_)
            for h in group[:]:
                frontier.append(compose(g_, h))
                frontier.append(compose(h, g_))
    assert len(group) == 8

    def normalize(coloring):
        # canonical renaming: colors by first appearance
        mapping = {}
        out = []
        for c in coloring:
            mapping.setdefault(c, len(mapping) + 1)
            out.append(mapping[c])
        return tuple(out)

    balanced = set()
    for coloring in product(range(1, 7), repeat=6):
        values = {}
        for slot, c in enumerate(coloring):
            values[c] = values.get(c, 0) + (1 if slot < 3 else -1)
        if any(v != 0 for v in values.values()):
            continue
        orbit = min(
            normalize([coloring[perm[i]] for i in range(6)]) for perm in group
        )
        balanced.add(orbit)
    assert len(balanced) == 6


def test_enumeration_trivia():
    triangle_free = ColoredGraph(6, 1, [(0, 1, 1), (2, 3, 1), (4, 5, 1)])
    assert list(enumerate_bowties(triangle_free)) == []
    two_triangles = ColoredGraph(
        5, 1, [(0, 1, 1), (0, 2, 1), (1, 2, 1), (0, 3, 1), (0, 4, 1), (3, 4, 1)]
    )
    bows = list(enumerate_bowties(two_triangles))
    assert len(bows) == 1
    assert bows[0] == Bowtie(0, 1, 2, 3, 4)


def test_k5_has_fifteen_bowties():
    k5 = ColoredGraph(5, 1, [(u, v, 1) for u in range(5) for v in range(u + 1, 5)])
    assert len(list(enumerate_bowties(k5))) == 15


def test_enumeration_matches_brute_force():
    rng = random.Random(23)
    for _ in range(150):
        g = random_colored_graph(rng, rng.randint(5, 9), 2, rng.uniform(0.3, 0.9))
        got = {b.vertices() for b in enumerate_bowties(g)}
        assert got == brute_bowties(g)


def test_enumeration_cap_and_badness_filter():
    g = bowtie_host([1, 1, 1, 2, 2, 2])
    assert len(list(enumerate_bowties(g, only_bad=True))) == 1
    balanced = bowtie_host([1] * 6)
    assert list(enumerate_bowties(balanced, only_bad=True)) == []
    k5 = ColoredGraph(5, 1, [(u, v, 1) for u in range(5) for v in range(u + 1, 5)])
    assert len(list(enumerate_bowties(k5, cap=4))) == 4


def test_constructions_are_bad_bowtie_free():
    for g, _ in (build_general_r(8, 2), build_tripartite_3(9)):
        assert next(enumerate_bowties(g, only_bad=True, cap=1), None) is None


def test_packing_trivial_cases():
    balanced = bowtie_host([1] * 6)
    packing = greedy_disjoint_bad_packing(balanced)
    assert packing.t == 0 and packing.covered == ()
    planted = bowtie_host([1, 1, 1, 2, 2, 2])
    packing = greedy_disjoint_bad_packing(planted)
    assert packing.t == 1 and packing.covered == (0, 1, 2, 3, 4)


def test_packing_is_maximal_on_random_graphs():
    rng = random.Random(37)
    for _ in range(40):
        g = random_colored_graph(rng, 10, 2, 0.6)
        packing = greedy_disjoint_bad_packing(g)
        covered = set(packing.covered)
        assert len(covered) == 5 * packing.t
        for b in packing.bowties:
            assert is_bad(g, b)[0]
        # no bad bowtie survives among uncovered vertices
        for tup in brute_bowties(g):
            if covered.isdisjoint(tup):
                bow = Bowtie(*tup)
                assert not is_bad(g, bow)[0]


def test_strip_leaves_constructions_untouched():
    g, _ = build_tripartite_3(9)
    result = strip_bad_bowties(g)
    assert result.removed == () and result.t == 0
    assert result.graph == g


def test_strip_planted_recoloring():
    g, parts = build_general_r(16, 2)
    hub = parts[1]
    u, v = hub[0], hub[1]
    edges = [
        (a, b, 1 if (a, b) == (u, v) else c) for a, b, c in g.edges()
    ]
    perturbed = ColoredGraph(16, 2, edges)
    result = strip_bad_bowties(perturbed)
    assert result.t == 1 and len(result.removed) == 5
    assert {u, v} <= set(result.removed)


def test_amplifier_single_bowtie():
    n = 9
    bow = Bowtie(0, 1, 2, 3, 4)
    edges = []
    special = {(0, 1): 1, (0, 2): 1}
    for a in range(n):
        for b in range(a + 1, n):
            edges.append((a, b, special.get((a, b), 2)))
    g = ColoredGraph(n, 2, edges)
    assert color_count_f(g, bow, 1) == 2
    result = amplifier_swap(g, [bow], 1)
    assert result.delta == 2 == sum(result.f_values)
    check_cycle_independently(g, result.h1)
    check_cycle_independently(g, result.h2)
    assert {(0, 1), (0, 2), (3, 4)} <= set(result.h1.edges())
    assert {(1, 2), (0, 3), (0, 4)} <= set(result.h2.edges())


def test_amplifier_empty_list():
    k6 = ColoredGraph(6, 2, [(u, v, 1) for u in range(6) for v in range(u + 1, 6)])
    result = amplifier_swap(k6, [], 1)
    assert result.delta == 0
    assert result.h1 == result.h2


def test_amplifier_two_bowties():
    n = 13
    special = {(0, 1): 1, (5, 6): 1, (5, 7): 1, (8, 9): 1}
    edges = []
    for a in range(n):
        for b in range(a + 1, n):
            edges.append((a, b, special.get((a, b), 2)))
    g = ColoredGraph(n, 2, edges)
    b1 = Bowtie(0, 1, 2, 3, 4)
    b2 = Bowtie(5, 6, 7, 8, 9)
    assert color_count_f(g, b1, 1) == 1
    assert color_count_f(g, b2, 1) == 3
    result = amplifier_swap(g, [b1, b2], 1)
    assert result.delta == 4
    assert result.f_values == (1, 3)


def test_amplifier_reorients_negative_bowties():
    g = ColoredGraph(
        9, 2, [(a, b, 2 if (a, b) in {(0, 1), (0, 2)} else 1) for a in range(9) for b in range(a + 1, 9)]
    )
    bow = Bowtie(0, 1, 2, 3, 4)
    assert color_count_f(g, bow, 2) == 2
    assert color_count_f(g, bow.swap_pairs(), 2) == -2
    result = amplifier_swap(g, [bow.swap_pairs()], 2)
    assert result.delta == 2


def test_amplifier_error_cases():
    k9 = ColoredGraph(9, 2, [(u, v, 1) for u in range(9) for v in range(u + 1, 9)])
    with pytest.raises(NotDisjoint):
        amplifier_swap(k9, [Bowtie(0, 1, 2, 3, 4), Bowtie(4, 5, 6, 7, 8)], 1)
    with pytest.raises(NotKBad):
        amplifier_swap(k9, [Bowtie(0, 1, 2, 3, 4)], 1)  # monochromatic, f = 0
