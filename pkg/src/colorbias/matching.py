"""Maximum matching in general graphs and matching-exclusion predicates.

The matcher is a blossom-contraction augmenting-path algorithm (general
graphs, unweighted).  The exclusion predicates only need to decide whether a
matching of size s exists, so augmentation stops early once s edges are
matched; s is typically far smaller than n.

A subgraph to test is designated either by a vertex set (edges inside it) or
by a pair of disjoint vertex sets (edges across them).
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, NamedTuple, Sequence, Union

from .errors import ColorOutOfRange
from .graph import ColoredGraph, edges_between, edges_within, vertex_set

# A vertex set, or a (side_a, side_b) pair of vertex sets.
SubgraphSelector = Union[Iterable[int], tuple[Iterable[int], Iterable[int]]]


class PredicateResult(NamedTuple):
    holds: bool
    witness: tuple[tuple[int, int], ...] | None  # size-s matching when holds is False


def _blossom_maximum_matching(
    n: int, adj: Sequence[Sequence[int]], stop_at: int | None = None
) -> list[int]:
    """Return mate[v] (-1 if unmatched) for a maximum-cardinality matching.

    Deterministic: adjacency lists must be sorted ascending, free vertices
    are scanned in ascending order, and the BFS queue is FIFO.  With stop_at
    set, the search stops as soon as the matching reaches that size (the
    result is then not necessarily maximum).
    """
    mate = [-1] * n
    # Greedy seed: cheap, deterministic, and leaves fewer augmentation rounds.
    for v in range(n):
        if mate[v] == -1:
            for u in adj[v]:
                if mate[u] == -1:
                    mate[v] = u
                    mate[u] = v
                    break
    size = sum(1 for v in range(n) if mate[v] != -1) // 2

    parent = [-1] * n
    base = list(range(n))

    def lowest_common_ancestor(a: int, b: int) -> int:
        on_path = [False] * n
        while True:
            a = base[a]
            on_path[a] = True
            if mate[a] == -1:
                break
            a = parent[mate[a]]
        while True:
            b = base[b]
            if on_path[b]:
                return b
            b = parent[mate[b]]

    def mark_blossom(v: int, ancestor: int, child: int, in_blossom: list[bool]) -> None:
        while base[v] != ancestor:
            in_blossom[base[v]] = True
            in_blossom[base[mate[v]]] = True
            parent[v] = child
            child = mate[v]
            v = parent[mate[v]]

    def find_augmenting_path(root: int) -> bool:
        nonlocal parent, base
        used = [False] * n
        parent = [-1] * n
        base = list(range(n))
        used[root] = True
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for to in adj[v]:
                if base[v] == base[to] or mate[v] == to:
                    continue
                if to == root or (mate[to] != -1 and parent[mate[to]] != -1):
                    # Odd cycle: contract the blossom down to the common base.
                    ancestor = lowest_common_ancestor(v, to)
                    in_blossom = [False] * n
                    mark_blossom(v, ancestor, to, in_blossom)
                    mark_blossom(to, ancestor, v, in_blossom)
                    for i in range(n):
                        if in_blossom[base[i]]:
                            base[i] = ancestor
                            if not used[i]:
                                used[i] = True
                                queue.append(i)
                elif parent[to] == -1:
                    parent[to] = v
                    if mate[to] == -1:
                        # Augment: flip matched/unmatched along the path.
                        u = to
                        while u != -1:
                            pv = parent[u]
                            next_u = mate[pv]
                            mate[u] = pv
                            mate[pv] = u
                            u = next_u
                        return True
                    used[mate[to]] = True
                    queue.append(mate[to])
        return False

    for v in range(n):
        if stop_at is not None and size >= stop_at:
            break
        if mate[v] == -1 and find_augmenting_path(v):
            size += 1
    return mate


def _matching_on_edges(
    edges: Sequence[tuple[int, int]], stop_at: int | None = None
) -> list[tuple[int, int]]:
    """Run the matcher on an edge list over arbitrary vertex labels."""
    labels = sorted({v for e in edges for v in e})
    index = {v: i for i, v in enumerate(labels)}
    adj: list[list[int]] = [[] for _ in labels]
    for u, v in edges:
        adj[index[u]].append(index[v])
        adj[index[v]].append(index[u])
    for row in adj:
        row.sort()
    mate = _blossom_maximum_matching(len(labels), adj, stop_at=stop_at)
    pairs = []
    for i, j in enumerate(mate):
        if j > i:
            u, v = labels[i], labels[j]
            pairs.append((min(u, v), max(u, v)))
    pairs.sort()
    return pairs


def max_matching(g: ColoredGraph, stop_at: int | None = None) -> tuple[tuple[int, int], ...]:
    """A maximum-cardinality matching of g, color-blind.

    Returned as sorted (u, v) pairs.  Ties among maximum matchings are broken
    deterministically but arbitrarily; only size and validity are contractual.
    """
    return tuple(_matching_on_edges([(u, v) for u, v, _ in g.edges()], stop_at=stop_at))


def _selector_edges(
    g: ColoredGraph, selector: SubgraphSelector, drop_color: int | None = None
) -> list[tuple[int, int]]:
    if (
        isinstance(selector, tuple)
        and len(selector) == 2
        and not isinstance(selector[0], int)
        and not isinstance(selector[1], int)
    ):
        side_a, side_b = selector
        edge_iter = edges_between(g, side_a, side_b)
    else:
        edge_iter = edges_within(g, selector)  # type: ignore[arg-type]
    return [(u, v) for u, v, c in edge_iter if c != drop_color]


def is_nearly_empty(g: ColoredGraph, selector: SubgraphSelector, s: int) -> PredicateResult:
    """True iff the selected subgraph has no matching of size s.

    When false, the witness is a matching of exactly s edges.
    """
    if s < 1:
        raise ValueError("s must be at least 1")
    edges = _selector_edges(g, selector)
    pairs = _matching_on_edges(edges, stop_at=s)
    if len(pairs) >= s:
        return PredicateResult(False, tuple(pairs[:s]))
    return PredicateResult(True, None)


def is_nearly_monochromatic(
    g: ColoredGraph, selector: SubgraphSelector, s: int, k: int
) -> PredicateResult:
    """True iff deleting all k-colored edges leaves no matching of size s."""
    if s < 1:
        raise ValueError("s must be at least 1")
    if not (1 <= k <= g.r):
        raise ColorOutOfRange(f"color {k} outside 1..{g.r}")
    edges = _selector_edges(g, selector, drop_color=k)
    pairs = _matching_on_edges(edges, stop_at=s)
    if len(pairs) >= s:
        return PredicateResult(False, tuple(pairs[:s]))
    return PredicateResult(True, None)


def normalize_selector(
    g: ColoredGraph, selector: SubgraphSelector
) -> tuple[tuple[int, ...], ...]:
    """Normalize a selector to one or two sorted vertex tuples (for reports)."""
    if (
        isinstance(selector, tuple)
        and len(selector) == 2
        and not isinstance(selector[0], int)
        and not isinstance(selector[1], int)
    ):
        return (vertex_set(selector[0], g.n), vertex_set(selector[1], g.n))
    return (vertex_set(selector, g.n),)  # type: ignore[arg-type]
