"""Generators for the three reference edge-colored graphs.

Each generator returns the graph together with its defining partition, so
downstream structure checks never have to re-discover it.  Sizes must satisfy
the stated divisibility exactly; rounding is left to partition recovery.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DivisibilityError, ParameterError
from .graph import ColoredGraph

RED, BLUE = 1, 2  # fixed color convention for the two-color construction


@dataclass(frozen=True)
class ConstructionSpec:
    kind: str  # "general-r" | "tripartite3" | "counterexample2"
    n: int
    r: int
    t: int | None = None


def build_general_r(n: int, r: int) -> tuple[ColoredGraph, tuple[tuple[int, ...], ...]]:
    """Dominant-color construction: r-1 small independent parts plus a big hub.

    |V_i| = n/2r for i < r and |V_r| = (r+1)n/2r.  Every edge has an endpoint
    in V_r; an edge meeting V_i (i < r) is colored i, edges inside V_r are
    colored r.  Every Hamilton cycle of the result is perfectly balanced.
    """
    if r < 2:
        raise ParameterError("need at least 2 colors")
    if n % (2 * r) != 0:
        raise DivisibilityError(f"2r = {2 * r} must divide n = {n}")
    q = n // (2 * r)
    parts = [tuple(range(i * q, (i + 1) * q)) for i in range(r - 1)]
    parts.append(tuple(range((r - 1) * q, n)))
    part_of = [0] * n
    for i, part in enumerate(parts):
        for v in part:
            part_of[v] = i
    hub = r - 1
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            if part_of[u] == hub or part_of[v] == hub:
                small = min(part_of[u], part_of[v])
                edges.append((u, v, small + 1))
    return ColoredGraph(n, r, edges), tuple(parts)


def build_tripartite_3(n: int) -> tuple[ColoredGraph, tuple[tuple[int, ...], ...]]:
    """Complete 3-partite graph where an edge's color names the part it avoids."""
    if n % 3 != 0:
        raise DivisibilityError(f"3 must divide n = {n}")
    q = n // 3
    parts = tuple(tuple(range(i * q, (i + 1) * q)) for i in range(3))
    part_of = [v // q for v in range(n)]
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            if part_of[u] != part_of[v]:
                k = 3 - part_of[u] - part_of[v]  # the index not touched
                edges.append((u, v, k + 1))
    return ColoredGraph(n, 3, edges), parts


def build_counterexample_2(
    n: int, t: int
) -> tuple[ColoredGraph, tuple[tuple[int, ...], ...]]:
    """Two-color construction with a small bridging set V0 of size t.

    Red clique on V0 u V2, blue clique on V1, blue complete bipartite V0-V1,
    no V1-V2 edges.  Along any Hamilton cycle each color appears at least
    (n-t)/2 times, so the scaled bias never exceeds t.
    """
    if t < 1:
        raise ParameterError("t must be at least 1")
    if (n - t) % 2 != 0:
        raise ParameterError(f"n - t = {n - t} must be even")
    if n - t < 4:
        raise ParameterError("n - t must be at least 4")
    half = (n - t) // 2
    v0 = tuple(range(t))
    v1 = tuple(range(t, t + half))
    v2 = tuple(range(t + half, n))
    red_side = set(v0) | set(v2)
    blue_side = set(v1)
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            if u in red_side and v in red_side:
                edges.append((u, v, RED))
            elif u in blue_side and v in blue_side:
                edges.append((u, v, BLUE))
            elif (u in set(v0) and v in blue_side) or (v in set(v0) and u in blue_side):
                edges.append((u, v, BLUE))
    return ColoredGraph(n, 2, edges), (v0, v1, v2)


def counterexample_min_degree(n: int, t: int) -> dict[str, int]:
    """Computed vs nominal minimum degree of the two-color construction.

    The nominal formula (n+t)/2 counts the vertex itself inside its clique;
    the realized minimum degree is one less.  Both values are reported so the
    discrepancy stays visible.
    """
    return {"computed": (n + t) // 2 - 1, "nominal": (n + t) // 2}


def build(spec: ConstructionSpec) -> tuple[ColoredGraph, tuple[tuple[int, ...], ...], tuple[str, ...]]:
    """Dispatch a ConstructionSpec; returns (graph, parts, part labels)."""
    if spec.kind == "general-r":
        g, parts = build_general_r(spec.n, spec.r)
        return g, parts, tuple(f"V{i + 1}" for i in range(spec.r))
    if spec.kind == "tripartite3":
        g, parts = build_tripartite_3(spec.n)
        return g, parts, ("V1", "V2", "V3")
    if spec.kind == "counterexample2":
        if spec.t is None:
            raise ParameterError("counterexample2 requires t")
        g, parts = build_counterexample_2(spec.n, spec.t)
        return g, parts, ("V0", "V1", "V2")
    raise ParameterError(f"unknown construction kind {spec.kind!r}")
