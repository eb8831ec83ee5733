"""Bowtie configurations: the color-counting function, packing, and the swap.

A bowtie is two triangles sharing a center: ordered vertices (v1..v5) with
edges v1v2, v1v3, v1v4, v1v5, v2v3, v4v5.  Its color-counting value for color
k adds the indicator of k over {v1v2, v1v3, v4v5} and subtracts it over
{v1v4, v1v5, v2v3}; a bowtie is bad when the value is nonzero for some color.

The canonical labeling fixes the 8-fold symmetry: pairs sorted internally and
{v2,v3} lexicographically before {v4,v5}.  Swapping the two pairs negates the
color-counting value, which is how callers normalize it to be positive.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import ColorOutOfRange, InvalidBowtie, NotDisjoint, NotKBad
from .graph import ColoredGraph, induced_subgraph
from .hamilton import HamiltonCycle, canonical_cycle, extend_to_hamilton


@dataclass(frozen=True)
class Bowtie:
    v1: int
    v2: int
    v3: int
    v4: int
    v5: int

    def vertices(self) -> tuple[int, int, int, int, int]:
        return (self.v1, self.v2, self.v3, self.v4, self.v5)

    def plus_edges(self) -> tuple[tuple[int, int], ...]:
        return ((self.v1, self.v2), (self.v1, self.v3), (self.v4, self.v5))

    def minus_edges(self) -> tuple[tuple[int, int], ...]:
        return ((self.v1, self.v4), (self.v1, self.v5), (self.v2, self.v3))

    def edges(self) -> tuple[tuple[int, int], ...]:
        return self.plus_edges() + self.minus_edges()

    def swap_pairs(self) -> "Bowtie":
        """Exchange the two triangles; negates the color-counting value."""
        return Bowtie(self.v1, self.v4, self.v5, self.v2, self.v3)

    def to_line(self) -> str:
        return " ".join(str(v) for v in self.vertices())

    @classmethod
    def from_line(cls, line: str) -> "Bowtie":
        fields = line.split()
        if len(fields) != 5:
            raise InvalidBowtie(f"expected 5 vertices, got {len(fields)}")
        try:
            return cls(*(int(f) for f in fields))
        except ValueError:
            raise InvalidBowtie(f"non-integer vertex in {line!r}") from None


@dataclass(frozen=True)
class BowtiePacking:
    """Vertex-disjoint bad bowties with their covered vertex set."""

    bowties: tuple[Bowtie, ...]
    covered: tuple[int, ...]  # sorted union of all vertices

    @property
    def t(self) -> int:
        return len(self.bowties)


@dataclass(frozen=True)
class StripResult:
    graph: ColoredGraph  # induced subgraph on the uncovered vertices
    removed: tuple[int, ...]  # V0, sorted
    vertex_map: tuple[int, ...]  # residual index -> original vertex
    packing: BowtiePacking

    @property
    def t(self) -> int:
        return self.packing.t


def validate_bowtie(g: ColoredGraph, b: Bowtie) -> None:
    vs = b.vertices()
    if len(set(vs)) != 5:
        raise InvalidBowtie(f"vertices must be distinct: {vs}")
    if not all(0 <= v < g.n for v in vs):
        raise InvalidBowtie(f"vertices outside 0..{g.n - 1}: {vs}")
    for u, v in b.edges():
        if not g.has_edge(u, v):
            raise InvalidBowtie(f"missing edge {u} {v}")


def color_count_f(g: ColoredGraph, b: Bowtie, k: int) -> int:
    """Signed count of k-colored edges over the bowtie; always in [-3, 3]."""
    validate_bowtie(g, b)
    if not (1 <= k <= g.r):
        raise ColorOutOfRange(f"color {k} outside 1..{g.r}")
    plus = sum(1 for u, v in b.plus_edges() if g.edge_color(u, v) == k)
    minus = sum(1 for u, v in b.minus_edges() if g.edge_color(u, v) == k)
    return plus - minus


def is_bad(g: ColoredGraph, b: Bowtie) -> tuple[bool, int | None]:
    """Whether some color has nonzero count; returns the smallest such color."""
    validate_bowtie(g, b)
    for k in range(1, g.r + 1):
        plus = sum(1 for u, v in b.plus_edges() if g.edge_color(u, v) == k)
        minus = sum(1 for u, v in b.minus_edges() if g.edge_color(u, v) == k)
        if plus != minus:
            return True, k
    return False, None


def _is_bad_unchecked(g: ColoredGraph, b: Bowtie) -> bool:
    for k in range(1, g.r + 1):
        plus = sum(1 for u, v in b.plus_edges() if g.edge_color(u, v) == k)
        minus = sum(1 for u, v in b.minus_edges() if g.edge_color(u, v) == k)
        if plus != minus:
            return True
    return False


def enumerate_bowties(
    g: ColoredGraph, only_bad: bool = False, cap: int | None = None
) -> Iterator[Bowtie]:
    """Each unordered bowtie once, canonically labeled, in deterministic order.

    Centers ascend; for each center the two pairs are edges inside its
    neighborhood, listed in lexicographic order with the smaller pair first.
    """
    if cap is not None and cap <= 0:
        return
    emitted = 0
    for center in g.vertices():
        nbrs = g.neighbors(center)
        inner = [
            (u, v)
            for i, u in enumerate(nbrs)
            for v in nbrs[i + 1 :]
            if g.has_edge(u, v)
        ]
        for i, first in enumerate(inner):
            for second in inner[i + 1 :]:
                if first[0] in second or first[1] in second:
                    continue
                b = Bowtie(center, first[0], first[1], second[0], second[1])
                if only_bad and not _is_bad_unchecked(g, b):
                    continue
                yield b
                emitted += 1
                if cap is not None and emitted >= cap:
                    return


def greedy_disjoint_bad_packing(g: ColoredGraph) -> BowtiePacking:
    """First-fit maximal family of vertex-disjoint bad bowties.

    Maximality follows from taking bowties in canonical enumeration order:
    anything disjoint from the chosen family would have been taken when
    its turn came.
    """
    chosen: list[Bowtie] = []
    covered: set[int] = set()
    for b in enumerate_bowties(g, only_bad=True):
        vs = b.vertices()
        if covered.isdisjoint(vs):
            chosen.append(b)
            covered.update(vs)
    return BowtiePacking(tuple(chosen), tuple(sorted(covered)))


def strip_bad_bowties(g: ColoredGraph) -> StripResult:
    """Remove a maximal bad-bowtie packing and certify the residual clean.

    The residual is re-scanned exhaustively; a surviving bad bowtie would be a
    bug in the packing, not a property of the input.
    """
    packing = greedy_disjoint_bad_packing(g)
    keep = [v for v in g.vertices() if v not in set(packing.covered)]
    sub, vmap = induced_subgraph(g, keep)
    leftover = next(enumerate_bowties(sub, only_bad=True, cap=1), None)
    if leftover is not None:
        raise RuntimeError(f"residual still has a bad bowtie: {leftover.to_line()}")
    return StripResult(sub, packing.covered, vmap, packing)


@dataclass(frozen=True)
class AmplifierResult:
    h1: HamiltonCycle
    h2: HamiltonCycle
    delta: int  # count of color k on h1 minus on h2
    f_values: tuple[int, ...]  # per bowtie, after reorientation


def amplifier_swap(
    g: ColoredGraph, bowties: Sequence[Bowtie], k: int
) -> AmplifierResult:
    """Build two Hamilton cycles whose color-k counts differ by sum of f values.

    Each bowtie (reoriented so its value for k is positive) contributes its
    three plus-edges to a path system L1; a Hamilton cycle H1 through L1 is
    rerouted into H2 by replacing L1 with the minus-edges.  The identity
    delta = sum_i f(B_i, k) is checked exactly and a mismatch is a hard error.
    """
    if not (1 <= k <= g.r):
        raise ColorOutOfRange(f"color {k} outside 1..{g.r}")
    seen: set[int] = set()
    for b in bowties:
        validate_bowtie(g, b)
        if not seen.isdisjoint(b.vertices()):
            raise NotDisjoint(f"bowtie {b.to_line()} shares a vertex with another")
        seen.update(b.vertices())
    oriented: list[Bowtie] = []
    for b in bowties:
        f = color_count_f(g, b, k)
        if f == 0:
            raise NotKBad(f"bowtie {b.to_line()} has zero count for color {k}")
        oriented.append(b if f > 0 else b.swap_pairs())
    f_values = tuple(color_count_f(g, b, k) for b in oriented)

    l1 = [(min(e), max(e)) for b in oriented for e in b.plus_edges()]
    l2 = [(min(e), max(e)) for b in oriented for e in b.minus_edges()]
    h1 = extend_to_hamilton(g, l1)
    h2_edges = (set(h1.edges()) - set(l1)) | set(l2)
    h2 = _cycle_from_edges(g, h2_edges)
    delta = h1.count(k) - h2.count(k)
    if delta != sum(f_values):
        raise RuntimeError(
            f"swap identity violated: delta={delta}, sum f={sum(f_values)}"
        )
    return AmplifierResult(h1, h2, delta, f_values)


def _cycle_from_edges(g: ColoredGraph, edges: set[tuple[int, int]]) -> HamiltonCycle:
    nbr: dict[int, list[int]] = {}
    for u, v in edges:
        nbr.setdefault(u, []).append(v)
        nbr.setdefault(v, []).append(u)
    if len(nbr) != g.n or any(len(ns) != 2 for ns in nbr.values()):
        raise RuntimeError("bowtie swap produced a non-2-regular edge set")
    seq = [0]
    prev = None
    cur = 0
    while True:
        a, b = nbr[cur]
        nxt = b if a == prev else a
        if nxt == 0:
            break
        seq.append(nxt)
        prev, cur = cur, nxt
    if len(seq) != g.n:
        raise RuntimeError("bowtie swap disconnected the cycle")
    return canonical_cycle(g, seq)
