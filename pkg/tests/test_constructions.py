import pytest

from colorbias.constructions import (
    ConstructionSpec,
    build,
    build_counterexample_2,
    build_general_r,
    build_tripartite_3,
    counterexample_min_degree,
)
from colorbias.errors import DivisibilityError, ParameterError
from colorbias.graph import min_degree


def test_general_r_8_2():
    g, parts = build_general_r(8, 2)
    assert [len(p) for p in parts] == [2, 6]
    assert g.num_edges == 27
    assert min_degree(g) == 6
    hub = set(parts[1])
    for u, v, c in g.edges():
        assert u in hub or v in hub
        if u in hub and v in hub:
            assert c == 2
        else:
            small = v if u in hub else u
            assert small in set(parts[0]) and c == 1
    # small parts are independent sets
    for a in parts[0]:
        for b in parts[0]:
            assert a == b or not g.has_edge(a, b)


def test_general_r_16_4():
    g, parts = build_general_r(16, 4)
    assert [len(p) for p in parts] == [2, 2, 2, 10]
    assert min_degree(g) == 10  # (r+1)n/2r
    hub = set(parts[3])
    for i in range(3):
        for v in parts[i]:
            assert set(g.neighbors(v)) == hub
            assert all(g.edge_color(v, u) == i + 1 for u in hub)


def test_general_r_divisibility():
    with pytest.raises(DivisibilityError):
        build_general_r(10, 2)
    with pytest.raises(ParameterError):
        build_general_r(8, 1)


def test_tripartite_3():
    g, parts = build_tripartite_3(9)
    assert all(len(p) == 3 for p in parts)
    assert all(g.degree(v) == 6 for v in g.vertices())
    member = {v: i for i, part in enumerate(parts) for v in part}
    for u, v, c in g.edges():
        assert member[u] != member[v]
        avoided = c - 1
        assert member[u] != avoided and member[v] != avoided
    for part in parts:
        for a in part:
            for b in part:
                assert a == b or not g.has_edge(a, b)
    with pytest.raises(DivisibilityError):
        build_tripartite_3(8)


def test_counterexample_2():
    g, (v0, v1, v2) = build_counterexample_2(10, 2)
    assert (len(v0), len(v1), len(v2)) == (2, 4, 4)
    assert min_degree(g) == 5
    red = set(v0) | set(v2)
    for u, v, c in g.edges():
        if u in red and v in red:
            assert c == 1
        else:
            assert c == 2
    # no edges between v1 and v2
    for a in v1:
        for b in v2:
            assert not g.has_edge(a, b)
    # blue complete between v0 and v1
    for a in v0:
        for b in v1:
            assert g.edge_color(a, b) == 2


def test_counterexample_parameters():
    with pytest.raises(ParameterError):
        build_counterexample_2(10, 3)  # n - t odd
    with pytest.raises(ParameterError):
        build_counterexample_2(10, 0)
    with pytest.raises(ParameterError):
        build_counterexample_2(5, 3)  # n - t < 4


def test_counterexample_per_cycle_color_contributions():
    # on every Hamilton cycle, each V2 vertex rides two red edges and each
    # V1 vertex two blue ones, which forces both color floors
    from colorbias.hamilton import enumerate_hamilton_cycles

    g, (v0, v1, v2) = build_counterexample_2(10, 2)
    cycles = 0
    for h in enumerate_hamilton_cycles(g):
        seq = h.vertices
        n = len(seq)
        incident = {v: [] for v in range(n)}
        for i, u in enumerate(seq):
            w = seq[(i + 1) % n]
            c = g.edge_color(u, w)
            incident[u].append(c)
            incident[w].append(c)
        for v in v2:
            assert incident[v] == [1, 1]
        for v in v1:
            assert incident[v] == [2, 2]
        assert h.count(1) >= 4 and h.count(2) >= 4
        cycles += 1
    assert cycles > 0


def test_counterexample_min_degree_note():
    note = counterexample_min_degree(10, 2)
    assert note == {"computed": 5, "nominal": 6}
    g, _ = build_counterexample_2(10, 2)
    assert min_degree(g) == note["computed"] == note["nominal"] - 1


def test_build_dispatch():
    g, parts, labels = build(ConstructionSpec("general-r", 8, 2))
    assert labels == ("V1", "V2")
    g, parts, labels = build(ConstructionSpec("tripartite3", 9, 3))
    assert labels == ("V1", "V2", "V3")
    g, parts, labels = build(ConstructionSpec("counterexample2", 10, 2, t=2))
    assert labels == ("V0", "V1", "V2")
    with pytest.raises(ParameterError):
        build(ConstructionSpec("counterexample2", 10, 2))
    with pytest.raises(ParameterError):
        build(ConstructionSpec("nonsense", 8, 2))
