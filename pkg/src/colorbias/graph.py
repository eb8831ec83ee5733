"""Edge-colored simple graphs and the .ecg text format.

Vertices are 0-indexed, colors are 1-indexed (colors live in 1..r, and r may
exceed the number of colors actually used).  A ColoredGraph is immutable after
construction, so instances can be shared freely across workers.

.ecg format: the first content line is "n r"; every following content line is
"u v c" with 0 <= u < v < n and 1 <= c <= r.  Lines starting with "#" and
blank lines are ignored.  The canonical writer sorts edges by (u, v).
"""

from __future__ import annotations

from typing import Iterable, Iterator, NamedTuple

from .errors import ColorOutOfRange, OverlappingSides, ParseError, ValidationError


class ColoredGraph:
    """Simple graph on 0..n-1 with exactly one color in 1..r per edge."""

    __slots__ = ("n", "r", "_adj", "_nbrs", "_edge_list")

    def __init__(self, n: int, r: int, edges: Iterable[tuple[int, int, int]]):
        # n == 0 is representable (empty selections produce it); only the
        # .ecg parser rejects it.
        if n < 0:
            raise ValidationError("vertex count must be non-negative")
        if r < 1:
            raise ValidationError("color count must be at least 1")
        self.n = n
        self.r = r
        adj: list[dict[int, int]] = [{} for _ in range(n)]
        for u, v, c in edges:
            if u == v:
                raise ValidationError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValidationError(f"edge {u} {v} outside 0..{n - 1}")
            if not (1 <= c <= r):
                raise ValidationError(f"color {c} on edge {u} {v} outside 1..{r}")
            if v in adj[u]:
                raise ValidationError(f"duplicate edge {min(u, v)} {max(u, v)}")
            adj[u][v] = c
            adj[v][u] = c
        self._adj = adj
        self._nbrs = tuple(tuple(sorted(d)) for d in adj)
        self._edge_list = tuple(
            (u, v, adj[u][v]) for u in range(n) for v in self._nbrs[u] if u < v
        )

    # -- queries ---------------------------------------------------------

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj[u]

    def edge_color(self, u: int, v: int) -> int:
        try:
            return self._adj[u][v]
        except KeyError:
            raise ValidationError(f"{u} {v} is not an edge") from None

    def neighbors(self, v: int) -> tuple[int, ...]:
        """Neighbors of v in ascending order."""
        return self._nbrs[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def edges(self) -> tuple[tuple[int, int, int], ...]:
        """All edges as (u, v, color) with u < v, sorted by (u, v)."""
        return self._edge_list

    @property
    def num_edges(self) -> int:
        return len(self._edge_list)

    def vertices(self) -> range:
        return range(self.n)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ColoredGraph):
            return NotImplemented
        return (self.n, self.r, self._edge_list) == (other.n, other.r, other._edge_list)

    def __repr__(self) -> str:
        return f"ColoredGraph(n={self.n}, r={self.r}, edges={self.num_edges})"


class Subgraph(NamedTuple):
    """An induced subgraph together with the map from its labels back to the host."""

    graph: ColoredGraph
    vertex_map: tuple[int, ...]  # new index -> original vertex


class BipartiteSubgraph(NamedTuple):
    """Cross edges between two disjoint vertex sets, relabeled like Subgraph."""

    graph: ColoredGraph
    vertex_map: tuple[int, ...]
    side_a: tuple[int, ...]  # new indices
    side_b: tuple[int, ...]


def vertex_set(vertices: Iterable[int], n: int) -> tuple[int, ...]:
    """Normalize to a sorted duplicate-free tuple, validating bounds."""
    out = sorted(set(vertices))
    if out and not (0 <= out[0] and out[-1] < n):
        raise ValidationError(f"vertex set not within 0..{n - 1}")
    return tuple(out)


# -- .ecg input/output ----------------------------------------------------


def load_graph(text: str | bytes) -> ColoredGraph:
    """Parse .ecg text into a validated ColoredGraph."""
    if isinstance(text, bytes):
        text = text.decode("ascii")
    header: tuple[int, int] | None = None
    edges: list[tuple[int, int, int]] = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if header is None:
            if len(fields) != 2:
                raise ParseError("header must be 'n r'", line_no)
            try:
                n, r = int(fields[0]), int(fields[1])
            except ValueError:
                raise ParseError("header must contain two integers", line_no) from None
            if n < 1:
                raise ValidationError("vertex count must be at least 1")
            if r < 1:
                raise ValidationError("color count must be at least 1")
            header = (n, r)
            continue
        if len(fields) != 3:
            raise ParseError("edge line must be 'u v c'", line_no)
        try:
            u, v, c = (int(f) for f in fields)
        except ValueError:
            raise ParseError("edge line must contain three integers", line_no) from None
        if u == v:
            raise ValidationError(f"loop at vertex {u}")
        if u > v:
            raise ValidationError(f"edge endpoints must be increasing: {u} {v}")
        edges.append((u, v, c))
    if header is None:
        raise ParseError("missing header line", 1)
    return ColoredGraph(header[0], header[1], edges)


def save_graph(g: ColoredGraph) -> str:
    """Canonical .ecg text: header, then edges sorted by (u, v)."""
    lines = [f"{g.n} {g.r}"]
    lines.extend(f"{u} {v} {c}" for u, v, c in g.edges())
    return "\n".join(lines) + "\n"


def read_graph_file(path: str) -> ColoredGraph:
    with open(path, "rb") as fh:
        return load_graph(fh.read())


def write_graph_file(g: ColoredGraph, path: str) -> None:
    with open(path, "w", newline="\n") as fh:
        fh.write(save_graph(g))


# -- basic operations ------------------------------------------------------


def min_degree(g: ColoredGraph) -> int:
    return min(g.degree(v) for v in g.vertices())


def color_class(g: ColoredGraph, k: int) -> tuple[tuple[int, int], ...]:
    """All edges carrying color k, as sorted (u, v) pairs."""
    if not (1 <= k <= g.r):
        raise ColorOutOfRange(f"color {k} outside 1..{g.r}")
    return tuple((u, v) for u, v, c in g.edges() if c == k)


def induced_subgraph(g: ColoredGraph, vertices: Iterable[int]) -> Subgraph:
    """Subgraph on the given vertices, relabeled 0..|S|-1 in sorted order."""
    vmap = vertex_set(vertices, g.n)
    index = {v: i for i, v in enumerate(vmap)}
    edges = [
        (index[u], index[v], c)
        for u, v, c in g.edges()
        if u in index and v in index
    ]
    return Subgraph(ColoredGraph(len(vmap), g.r, edges), vmap)


def bipartite_between(
    g: ColoredGraph, side_a: Iterable[int], side_b: Iterable[int]
) -> BipartiteSubgraph:
    """Subgraph keeping only edges with one endpoint on each side."""
    a = vertex_set(side_a, g.n)
    b = vertex_set(side_b, g.n)
    if set(a) & set(b):
        raise OverlappingSides("sides must be disjoint")
    vmap = tuple(sorted(a + b))
    index = {v: i for i, v in enumerate(vmap)}
    in_a = set(a)
    in_b = set(b)
    edges = [
        (index[u], index[v], c)
        for u, v, c in g.edges()
        if (u in in_a and v in in_b) or (u in in_b and v in in_a)
    ]
    graph = ColoredGraph(len(vmap), g.r, edges)
    new_a = tuple(index[v] for v in a)
    new_b = tuple(index[v] for v in b)
    return BipartiteSubgraph(graph, vmap, new_a, new_b)


def relabel_colors(g: ColoredGraph, permutation: dict[int, int]) -> ColoredGraph:
    """Apply a color permutation (a bijection on 1..r) to every edge."""
    if sorted(permutation) != list(range(1, g.r + 1)) or sorted(
        permutation.values()
    ) != list(range(1, g.r + 1)):
        raise ColorOutOfRange("permutation must be a bijection on 1..r")
    return ColoredGraph(g.n, g.r, [(u, v, permutation[c]) for u, v, c in g.edges()])


def edges_within(g: ColoredGraph, vertices: Iterable[int]) -> Iterator[tuple[int, int, int]]:
    """Edges of g with both endpoints in the given set (original labels)."""
    inside = set(vertex_set(vertices, g.n))
    for u, v, c in g.edges():
        if u in inside and v in inside:
            yield (u, v, c)


def edges_between(
    g: ColoredGraph, side_a: Iterable[int], side_b: Iterable[int]
) -> Iterator[tuple[int, int, int]]:
    """Edges of g with one endpoint on each side (original labels)."""
    a = set(vertex_set(side_a, g.n))
    b = set(vertex_set(side_b, g.n))
    if a & b:
        raise OverlappingSides("sides must be disjoint")
    for u, v, c in g.edges():
        if (u in a and v in b) or (u in b and v in a):
            yield (u, v, c)
