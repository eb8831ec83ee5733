"""JIT-compiled search kernels behind the Hamilton-cycle operations.

These kernels exist purely for speed: full enumeration of a dense 12-vertex
graph touches ~10^8 search nodes, which is minutes in interpreted code and
about a second compiled.  The pure-Python enumerator in hamilton.py remains
the reference implementation; tests cross-check the two on small graphs.
"""

from __future__ import annotations

import numpy as np
from numba import njit


def adjacency_arrays(g) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Pack a ColoredGraph into (neighbor counts, neighbor table, color matrix)."""
    n = g.n
    nbr_count = np.zeros(n, dtype=np.int64)
    nbr_table = np.zeros((n, max(n, 1)), dtype=np.int64)
    color = np.zeros((n, n), dtype=np.int64)
    for v in range(n):
        nbrs = g.neighbors(v)
        nbr_count[v] = len(nbrs)
        for j, w in enumerate(nbrs):
            nbr_table[v, j] = w
    for u, v, c in g.edges():
        color[u, v] = c
        color[v, u] = c
    return nbr_count, nbr_table, color


@njit(cache=True)
def spectrum_kernel(n, r, nbr_count, nbr_table, color, budget):
    """Exhaustive DFS over canonical Hamilton cycles, aggregating color counts.

    Canonical form: the cycle starts at vertex 0 and its second vertex is the
    smaller of 0's two cycle neighbors, so each cycle is visited exactly once.

    Returns (cycle_count, min_scaled, max_scaled, min_counts, max_counts,
    nodes, completed) where scaled = max_i |r*c_i - n| and completed is 0 if
    the node budget ran out.
    """
    path = np.zeros(n, dtype=np.int64)
    ptr = np.zeros(n + 1, dtype=np.int64)
    counts = np.zeros(r, dtype=np.int64)
    min_counts = np.full(r, n + 1, dtype=np.int64)
    max_counts = np.full(r, -1, dtype=np.int64)
    cycle_count = np.int64(0)
    min_scaled = np.int64(2 ** 62)
    max_scaled = np.int64(-1)
    nodes = np.int64(0)

    visited = np.int64(1)  # vertex 0
    # Unvisited neighbors of 0: the cycle must end at one of them.
    free_end = nbr_count[0]
    depth = 1
    while depth > 0:
        if depth == n:
            last = path[n - 1]
            cc = color[last, 0]
            if cc > 0 and path[1] < last:
                counts[cc - 1] += 1
                scaled = np.int64(-1)
                for i in range(r):
                    d = r * counts[i] - n
                    if d < 0:
                        d = -d
                    if d > scaled:
                        scaled = d
                    if counts[i] < min_counts[i]:
                        min_counts[i] = counts[i]
                    if counts[i] > max_counts[i]:
                        max_counts[i] = counts[i]
                if scaled < min_scaled:
                    min_scaled = scaled
                if scaled > max_scaled:
                    max_scaled = scaled
                counts[cc - 1] -= 1
                cycle_count += 1
            depth -= 1
            v = path[depth]
            visited ^= np.int64(1) << v
            if color[0, v] > 0:
                free_end += 1
            counts[color[path[depth - 1], v] - 1] -= 1
            continue
        cur = path[depth - 1]
        advanced = False
        while ptr[depth] < nbr_count[cur]:
            nxt = nbr_table[cur, ptr[depth]]
            ptr[depth] += 1
            if visited & (np.int64(1) << nxt):
                continue
            is_end_candidate = color[0, nxt] > 0
            # Pruning: some unvisited neighbor of 0 must remain to close the
            # cycle, unless this vertex completes the path.
            if is_end_candidate and free_end == 1 and depth < n - 1:
                continue
            path[depth] = nxt
            visited |= np.int64(1) << nxt
            if is_end_candidate:
                free_end -= 1
            counts[color[cur, nxt] - 1] += 1
            depth += 1
            ptr[depth] = 0
            nodes += 1
            advanced = True
            break
        if not advanced:
            depth -= 1
            if depth > 0:
                v = path[depth]
                visited ^= np.int64(1) << v
                if color[0, v] > 0:
                    free_end += 1
                counts[color[path[depth - 1], v] - 1] -= 1
        if nodes > budget:
            return cycle_count, min_scaled, max_scaled, min_counts, max_counts, nodes, np.int64(0)
    return cycle_count, min_scaled, max_scaled, min_counts, max_counts, nodes, np.int64(1)


@njit(cache=True)
def hamilton_exists_kernel(n, adj_mask):
    """Bitmask DP for Hamilton-cycle existence (paths from vertex 0).

    dp[mask] holds the set of possible path ends over vertex subsets
    containing 0; a cycle exists iff some full-path end is adjacent to 0.
    Memory is 2^n words, so callers cap n around 20.
    """
    size = 1 << n
    dp = np.zeros(size, dtype=np.int64)
    dp[1] = 1
    for mask in range(1, size, 2):  # only subsets containing vertex 0
        ends = dp[mask]
        if ends == 0:
            continue
        e = ends
        while e != 0:
            low = e & (-e)
            v = 0
            while (low >> v) & 1 == 0:
                v += 1
            e ^= low
            avail = adj_mask[v] & ~mask
            a = avail
            while a != 0:
                lw = a & (-a)
                w = 0
                while (lw >> w) & 1 == 0:
                    w += 1
                a ^= lw
                dp[mask | (np.int64(1) << w)] |= np.int64(1) << w
    full = size - 1
    return (dp[full] & adj_mask[0]) != 0
