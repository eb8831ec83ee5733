"""Hamilton-cycle machinery: enumeration, color bias, and path-forced cycles.

A cycle is stored in canonical form (starts at vertex 0; the second vertex is
the smaller of 0's two cycle neighbors), which makes enumeration output
directly comparable across runs and implementations.

extend_to_hamilton grows a Hamilton cycle through a prescribed linear forest.
Each path of the forest is contracted to a two-port super-node and the search
runs over oriented super-nodes: a fast rotation-extension pass first, then an
exhaustive backtracking fallback for n <= 20.  Under the minimum-degree
hypothesis delta >= n/2 + (|E(L)|+1)/2 an extension always exists; the
fallback makes the search complete at desk scale regardless.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from .errors import (
    BudgetExceeded,
    InvalidCycle,
    NoExtensionFound,
    NotALinearForest,
    NotHamiltonian,
)
from .graph import ColoredGraph

DEFAULT_NODE_BUDGET = 10**8


@dataclass(frozen=True)
class HamiltonCycle:
    """A Hamilton cycle in canonical form with its per-color edge counts."""

    vertices: tuple[int, ...]
    color_counts: tuple[int, ...]  # index k-1 holds the count of color k

    @property
    def n(self) -> int:
        return len(self.vertices)

    def edges(self) -> tuple[tuple[int, int], ...]:
        seq = self.vertices
        out = []
        for i, u in enumerate(seq):
            v = seq[(i + 1) % len(seq)]
            out.append((min(u, v), max(u, v)))
        return tuple(sorted(out))

    def count(self, k: int) -> int:
        return self.color_counts[k - 1]

    def to_line(self) -> str:
        return " ".join(str(v) for v in self.vertices)


@dataclass(frozen=True)
class BiasReport:
    """Per-color counts with the bias in exact arithmetic.

    scaled_bias = max_i |r*c_i - n| is an integer; the displayed bias is
    scaled_bias / r, kept as a Fraction so n not divisible by r never rounds.
    """

    color_counts: tuple[int, ...]
    scaled_bias: int
    bias: Fraction


@dataclass(frozen=True)
class BiasSpectrum:
    """Exact extremes of the scaled bias over all Hamilton cycles."""

    cycle_count: int
    min_scaled: int
    max_scaled: int
    min_color_counts: tuple[int, ...]  # per color, min count over all cycles
    max_color_counts: tuple[int, ...]
    nodes_visited: int


@dataclass(frozen=True)
class PathSystem:
    """A union of vertex-disjoint paths (linear forest) inside a host graph."""

    edges: tuple[tuple[int, int], ...]

    @classmethod
    def in_graph(cls, g: ColoredGraph, edges: Iterable[tuple[int, int]]) -> "PathSystem":
        normalized = _check_linear_forest(g, edges)
        return cls(normalized)


def canonical_cycle(g: ColoredGraph, sequence: Sequence[int]) -> HamiltonCycle:
    """Validate a vertex sequence as a Hamilton cycle and canonicalize it."""
    n = g.n
    if n < 3:
        raise InvalidCycle("Hamilton cycles need at least 3 vertices")
    if len(sequence) != n or set(sequence) != set(range(n)):
        raise InvalidCycle("sequence must visit every vertex exactly once")
    seq = list(sequence)
    for i, u in enumerate(seq):
        v = seq[(i + 1) % n]
        if not g.has_edge(u, v):
            raise InvalidCycle(f"{u} {v} is not an edge")
    pos = seq.index(0)
    seq = seq[pos:] + seq[:pos]
    if seq[-1] < seq[1]:
        seq = [seq[0]] + seq[:0:-1]
    counts = [0] * g.r
    for i, u in enumerate(seq):
        v = seq[(i + 1) % n]
        counts[g.edge_color(u, v) - 1] += 1
    return HamiltonCycle(tuple(seq), tuple(counts))


def color_bias(g: ColoredGraph, h: HamiltonCycle) -> BiasReport:
    """Exact color bias of h, reported via the integer scaled form."""
    checked = canonical_cycle(g, h.vertices)
    if checked.color_counts != h.color_counts:
        raise InvalidCycle("color counts do not match the host graph")
    n, r = g.n, g.r
    scaled = max(abs(r * c - n) for c in checked.color_counts)
    return BiasReport(checked.color_counts, scaled, Fraction(scaled, r))


def enumerate_hamilton_cycles(
    g: ColoredGraph, cap: int | None = None
) -> Iterator[HamiltonCycle]:
    """Yield every Hamilton cycle exactly once, in canonical lexicographic order.

    Pure-Python reference enumerator; for aggregate statistics over large
    cycle sets use bias_spectrum, which runs compiled.
    """
    n = g.n
    if n < 3:
        raise ValueError("Hamilton cycles need at least 3 vertices")
    if cap is not None and cap <= 0:
        return
    emitted = 0
    path = [0]

    def dfs(cur: int, visited: int) -> Iterator[tuple[int, ...]]:
        if len(path) == n:
            if g.has_edge(cur, 0) and path[1] < path[-1]:
                yield tuple(path)
            return
        for nxt in g.neighbors(cur):
            if not visited & (1 << nxt):
                path.append(nxt)
                yield from dfs(nxt, visited | (1 << nxt))
                path.pop()

    for seq in dfs(0, 1):
        counts = [0] * g.r
        for i, u in enumerate(seq):
            counts[g.edge_color(u, seq[(i + 1) % n]) - 1] += 1
        yield HamiltonCycle(seq, tuple(counts))
        emitted += 1
        if cap is not None and emitted >= cap:
            return


def has_hamilton_cycle(g: ColoredGraph) -> bool:
    """Decide Hamiltonicity: bitmask DP for n <= 20, first-cycle probe above."""
    if g.n < 3:
        return False
    if g.n <= 20:
        import numpy as np

        from . import _fastcycles  # deferred: pulls in the JIT toolchain

        adj_mask = np.zeros(g.n, dtype=np.int64)
        for u, v, _ in g.edges():
            adj_mask[u] |= np.int64(1) << v
            adj_mask[v] |= np.int64(1) << u
        return bool(_fastcycles.hamilton_exists_kernel(g.n, adj_mask))
    return next(enumerate_hamilton_cycles(g, cap=1), None) is not None


def bias_spectrum(g: ColoredGraph, node_budget: int = DEFAULT_NODE_BUDGET) -> BiasSpectrum:
    """Exact (min, max) scaled bias and cycle count over all Hamilton cycles.

    Raises NotHamiltonian when no cycle exists and BudgetExceeded when the
    search would pass node_budget DFS nodes.
    """
    n = g.n
    if n < 3:
        raise NotHamiltonian("no Hamilton cycle on fewer than 3 vertices")
    if n > 62:  # kernel bitmasks are 64-bit; enumeration is hopeless there anyway
        raise BudgetExceeded(f"full enumeration infeasible for n = {n}")
    if n <= 20 and not has_hamilton_cycle(g):
        raise NotHamiltonian("graph has no Hamilton cycle")
    from . import _fastcycles  # deferred: pulls in the JIT toolchain

    nbr_count, nbr_table, color = _fastcycles.adjacency_arrays(g)
    count, min_s, max_s, min_c, max_c, nodes, completed = _fastcycles.spectrum_kernel(
        n, g.r, nbr_count, nbr_table, color, node_budget
    )
    if not completed:
        raise BudgetExceeded(f"enumeration exceeded {node_budget} search nodes")
    if count == 0:
        raise NotHamiltonian("graph has no Hamilton cycle")
    return BiasSpectrum(
        int(count),
        int(min_s),
        int(max_s),
        tuple(int(x) for x in min_c),
        tuple(int(x) for x in max_c),
        int(nodes),
    )


# -- extension of a linear forest to a Hamilton cycle ----------------------


def _check_linear_forest(
    g: ColoredGraph, edges: Iterable[tuple[int, int]]
) -> tuple[tuple[int, int], ...]:
    seen = set()
    deg: dict[int, int] = {}
    normalized = []
    parent: dict[int, int] = {}

    def find(x: int) -> int:
        while parent.setdefault(x, x) != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in edges:
        if u == v or not (0 <= u < g.n and 0 <= v < g.n):
            raise NotALinearForest(f"bad edge {u} {v}")
        if not g.has_edge(u, v):
            raise NotALinearForest(f"{u} {v} is not an edge of the host graph")
        e = (min(u, v), max(u, v))
        if e in seen:
            raise NotALinearForest(f"repeated edge {e[0]} {e[1]}")
        seen.add(e)
        deg[u] = deg.get(u, 0) + 1
        deg[v] = deg.get(v, 0) + 1
        if deg[u] > 2 or deg[v] > 2:
            raise NotALinearForest("a vertex has degree above 2 in the system")
        ru, rv = find(u), find(v)
        if ru == rv:
            raise NotALinearForest("the edge set contains a cycle")
        parent[ru] = rv
        normalized.append(e)
    return tuple(sorted(normalized))


@dataclass(frozen=True)
class _Node:
    """A contracted path: traversing it enters at one port and exits at the other."""

    ports: tuple[int, int]
    sequence: tuple[int, ...]  # vertex order from ports[0] to ports[1]

    def entry(self, orient: int) -> int:
        return self.ports[orient]

    def exit(self, orient: int) -> int:
        return self.ports[1 - orient]

    def expand(self, orient: int) -> tuple[int, ...]:
        return self.sequence if orient == 0 else self.sequence[::-1]


def _contract_forest(g: ColoredGraph, forest: tuple[tuple[int, int], ...]) -> list[_Node]:
    nbr: dict[int, list[int]] = {}
    for u, v in forest:
        nbr.setdefault(u, []).append(v)
        nbr.setdefault(v, []).append(u)
    nodes = []
    consumed = set()
    endpoints = sorted(v for v, ns in nbr.items() if len(ns) == 1)
    for start in endpoints:
        if start in consumed:
            continue
        seq = [start]
        consumed.add(start)
        cur = start
        while True:
            nxt = [w for w in nbr[cur] if w not in consumed]
            if not nxt:
                break
            cur = nxt[0]
            seq.append(cur)
            consumed.add(cur)
        nodes.append(_Node((seq[0], seq[-1]), tuple(seq)))
    for v in range(g.n):
        if v not in consumed:
            nodes.append(_Node((v, v), (v,)))
    nodes.sort(key=lambda nd: min(nd.ports))
    return nodes


def _rotation_extension(
    g: ColoredGraph, nodes: list[_Node]
) -> list[tuple[int, int]] | None:
    """Grow an oriented node path by extension, using rotations when stuck.

    Returns a cyclic order [(node index, orientation), ...] or None.  The
    rotation step reverses a suffix of the path (flipping orientations), the
    classical way to reach new endpoints in dense graphs.
    """
    m = len(nodes)

    def entry(state: tuple[int, int]) -> int:
        return nodes[state[0]].entry(state[1])

    def exit_(state: tuple[int, int]) -> int:
        return nodes[state[0]].exit(state[1])

    def extensions(path: list[tuple[int, int]], used: set[int]):
        end = exit_(path[-1])
        for idx in range(m):
            if idx in used:
                continue
            ports = nodes[idx].ports
            orients = (0,) if ports[0] == ports[1] else (0, 1)
            for orient in orients:
                if g.has_edge(end, nodes[idx].entry(orient)):
                    yield (idx, orient)

    def rotations(path: list[tuple[int, int]]) -> Iterator[list[tuple[int, int]]]:
        end = exit_(path[-1])
        for i in range(len(path) - 2):
            if g.has_edge(exit_(path[i]), end):
                flipped = [(idx, 1 - o) for idx, o in reversed(path[i + 1 :])]
                yield path[: i + 1] + flipped

    path: list[tuple[int, int]] = [(0, 0)]
    used = {0}
    while True:
        ext = next(extensions(path, used), None)
        if ext is not None:
            path.append(ext)
            used.add(ext[0])
            continue
        # Stuck: search rotation-reachable variants, one representative per
        # distinct endpoint state.
        seen_ends = {path[-1]}
        frontier = [path]
        progressed = False
        while frontier and not progressed:
            nxt_frontier = []
            for p in frontier:
                for rotated in rotations(p):
                    endstate = rotated[-1]
                    if endstate in seen_ends:
                        continue
                    seen_ends.add(endstate)
                    if len(rotated) == m and g.has_edge(exit_(endstate), entry(rotated[0])):
                        return rotated
                    ext = next(extensions(rotated, used), None)
                    if ext is not None:
                        path = rotated + [ext]
                        used.add(ext[0])
                        progressed = True
                        break
                    nxt_frontier.append(rotated)
                if progressed:
                    break
            frontier = nxt_frontier
        if progressed:
            continue
        if len(path) == m and g.has_edge(exit_(path[-1]), entry(path[0])):
            return path
        return None


def _exhaustive_contracted(
    g: ColoredGraph, nodes: list[_Node]
) -> list[tuple[int, int]] | None:
    """Complete backtracking over oriented nodes; start node fixed at (0, 0)."""
    m = len(nodes)
    order: list[tuple[int, int]] = [(0, 0)]
    used = [False] * m
    used[0] = True

    def dfs() -> bool:
        if len(order) == m:
            return g.has_edge(nodes[order[-1][0]].exit(order[-1][1]), nodes[0].entry(0))
        end = nodes[order[-1][0]].exit(order[-1][1])
        for idx in range(1, m):
            if used[idx]:
                continue
            ports = nodes[idx].ports
            orients = (0,) if ports[0] == ports[1] else (0, 1)
            for orient in orients:
                if g.has_edge(end, nodes[idx].entry(orient)):
                    used[idx] = True
                    order.append((idx, orient))
                    if dfs():
                        return True
                    order.pop()
                    used[idx] = False
        return False

    return order if dfs() else None


def extend_to_hamilton(
    g: ColoredGraph, forest: PathSystem | Iterable[tuple[int, int]]
) -> HamiltonCycle:
    """A Hamilton cycle of g containing every edge of the given linear forest.

    Succeeds whenever delta(g) >= n/2 + (|E(L)|+1)/2; on other inputs the
    search is best-effort (exhaustive for n <= 20) and may raise
    NoExtensionFound.
    """
    if g.n < 3:
        raise NoExtensionFound("Hamilton cycles need at least 3 vertices")
    if isinstance(forest, PathSystem):
        edges = _check_linear_forest(g, forest.edges)
    else:
        edges = _check_linear_forest(g, forest)
    nodes = _contract_forest(g, edges)
    order = _rotation_extension(g, nodes)
    if order is None and g.n <= 20:
        order = _exhaustive_contracted(g, nodes)
    if order is None:
        raise NoExtensionFound("no Hamilton cycle through the given path system")
    seq: list[int] = []
    for idx, orient in order:
        seq.extend(nodes[idx].expand(orient))
    cycle = canonical_cycle(g, seq)
    missing = set(edges) - set(cycle.edges())
    if missing:  # cannot happen: forest edges are interior to contracted nodes
        raise RuntimeError(f"extension dropped forest edges {sorted(missing)}")
    return cycle
