"""Brute-force reference implementations the suite checks the library against.

Everything here recomputes from first principles: Floyd-Warshall distances,
explicit materialization of whole shortest paths, raw subset scans over the
power set. No logic is shared with the package internals, so agreement
between the two sides is evidence, not tautology.
"""

from __future__ import annotations

import math
import random
from collections import deque
from itertools import combinations

import hypothesis.strategies as st

from mkvis.graphs import Graph, random_connected

INF = math.inf


def distance_matrix(g: Graph):
    """All-pairs shortest path lengths by Floyd-Warshall."""
    n = g.n
    dist = [[INF] * n for _ in range(n)]
    for v in range(n):
        dist[v][v] = 0
    for u in range(n):
        for w in g.adj[u]:
            dist[u][w] = 1
    for mid in range(n):
        dm = dist[mid]
        for u in range(n):
            du = dist[u]
            via = du[mid]
            if via == INF:
                continue
            for w in range(n):
                alt = via + dm[w]
                if alt < du[w]:
                    du[w] = alt
    return dist


def all_geodesics(g: Graph, u: int, w: int, dist=None):
    """Every shortest u-w path, each as a full vertex tuple."""
    if dist is None:
        dist = distance_matrix(g)
    if dist[u][w] == INF:
        return []
    paths = []
    path = [u]

    def grow():
        cur = path[-1]
        if cur == w:
            paths.append(tuple(path))
            return
        for nb in g.adj[cur]:
            if dist[nb][w] == dist[cur][w] - 1:
                path.append(nb)
                grow()
                path.pop()

    grow()
    return paths


def pair_min_internal(g: Graph, x, u: int, w: int, dist=None):
    """Minimum count of x-members strictly inside a shortest u-w path.

    None when u and w are disconnected.
    """
    geos = all_geodesics(g, u, w, dist)
    if not geos:
        return None
    xs = set(x)
    return min(sum(1 for v in p[1:-1] if v in xs) for p in geos)


def pair_visible(g: Graph, x, u: int, w: int, k: int, dist=None) -> bool:
    c = pair_min_internal(g, x, u, w, dist)
    return c is not None and c <= k


def oracle_mkv_check(g: Graph, s, k: int, dist=None) -> bool:
    members = sorted(set(s))
    if dist is None:
        dist = distance_matrix(g)
    return all(
        pair_visible(g, members, u, w, k, dist)
        for i, u in enumerate(members)
        for w in members[i + 1 :]
    )


def oracle_variant_check(g: Graph, x, k: int, variant: str, dist=None) -> bool:
    xs = set(x)
    if dist is None:
        dist = distance_matrix(g)
    if variant == "total":
        pairs = combinations(range(g.n), 2)
    elif variant == "outer":
        inside = sorted(xs)
        outside = [v for v in range(g.n) if v not in xs]
        pairs = list(combinations(inside, 2)) + [(u, w) for u in inside for w in outside]
    elif variant == "dual":
        outside = [v for v in range(g.n) if v not in xs]
        pairs = list(combinations(sorted(xs), 2)) + list(combinations(outside, 2))
    else:
        raise ValueError(variant)
    return all(pair_visible(g, xs, u, w, k, dist) for u, w in pairs)


def brute_mu(g: Graph, k: int) -> int:
    dist = distance_matrix(g)
    for size in range(g.n, 0, -1):
        for comb in combinations(range(g.n), size):
            if oracle_mkv_check(g, comb, k, dist):
                return size
    return 0


def brute_variant_mu(g: Graph, k: int, variant: str) -> int:
    dist = distance_matrix(g)
    for size in range(g.n, -1, -1):
        for comb in combinations(range(g.n), size):
            if oracle_variant_check(g, comb, k, variant, dist):
                return size
    raise AssertionError("unreachable: the empty set passes every variant")


def brute_gp(g: Graph) -> int:
    dist = distance_matrix(g)

    def in_position(s) -> bool:
        for a, b in combinations(s, 2):
            for m in s:
                if m != a and m != b and dist[a][m] + dist[m][b] == dist[a][b]:
                    return False
        return True

    for size in range(g.n, 0, -1):
        for comb in combinations(range(g.n), size):
            if in_position(comb):
                return size
    return 0


def brute_polynomial(g: Graph, k: int) -> list[int]:
    dist = distance_matrix(g)
    coeffs = [0] * (g.n + 1)
    for size in range(g.n + 1):
        for comb in combinations(range(g.n), size):
            if oracle_mkv_check(g, comb, k, dist):
                coeffs[size] += 1
    return coeffs


def brute_tau(g: Graph, k: int) -> int:
    """Minimum number of mutual k-visible parts by canonical partition search."""
    n = g.n
    if n == 0:
        return 0
    dist = distance_matrix(g)
    feasible_memo: dict = {}

    def feasible(part) -> bool:
        key = frozenset(part)
        hit = feasible_memo.get(key)
        if hit is None:
            hit = feasible_memo[key] = oracle_mkv_check(g, part, k, dist)
        return hit

    best = n

    def place(v, parts):
        nonlocal best
        if len(parts) >= best:
            return
        if v == n:
            best = len(parts)
            return
        for part in parts:
            part.append(v)
            if feasible(part):
                place(v + 1, parts)
            part.pop()
        parts.append([v])
        place(v + 1, parts)
        parts.pop()

    place(0, [])
    return best


def _subset_connected(g: Graph, vs) -> bool:
    vs = set(vs)
    if not vs:
        return True
    start = next(iter(vs))
    seen = {start}
    queue = deque([start])
    while queue:
        cur = queue.popleft()
        for nb in g.adj[cur]:
            if nb in vs and nb not in seen:
                seen.add(nb)
                queue.append(nb)
    return seen == vs


def brute_articulation(g: Graph) -> set[int]:
    full = set(range(g.n))
    return {
        v
        for v in range(g.n)
        if g.n > 2 and not _subset_connected(g, full - {v})
    }


def brute_blocks(g: Graph) -> set[frozenset]:
    """Blocks as maximal vertex sets inducing a connected, cut-free subgraph.

    A block's vertex set induces the block itself (any chord would lie in the
    same block), so maximal such sets are exactly the blocks.
    """
    if g.n == 1:
        return {frozenset({0})}
    cands = []
    for size in range(2, g.n + 1):
        for comb in combinations(range(g.n), size):
            sub = set(comb)
            if not _subset_connected(g, sub):
                continue
            if size > 2 and any(not _subset_connected(g, sub - {v}) for v in sub):
                continue
            cands.append(frozenset(sub))
    return {c for c in cands if not any(c < d for d in cands)}


def _bfs_len_avoiding_edge(g: Graph, src: int, dst: int, a: int, b: int):
    seen = {src: 0}
    queue = deque([src])
    while queue:
        cur = queue.popleft()
        if cur == dst:
            return seen[cur]
        for nb in g.adj[cur]:
            if (cur == a and nb == b) or (cur == b and nb == a):
                continue
            if nb not in seen:
                seen[nb] = seen[cur] + 1
                queue.append(nb)
    return INF


def brute_girth(g: Graph):
    """Shortest cycle length: detour around each edge, plus the edge itself."""
    best = INF
    for u, w in g.edges():
        best = min(best, _bfs_len_avoiding_edge(g, u, w, u, w) + 1)
    return best


def tree_path_naive(tree, a, b) -> list:
    """Unique a-b path in a block-cutpoint tree by plain BFS."""
    prev = {a: None}
    queue = deque([a])
    while queue:
        cur = queue.popleft()
        if cur == b:
            out = []
            while cur is not None:
                out.append(cur)
                cur = prev[cur]
            return out[::-1]
        for nb in tree.neighbors(cur):
            if nb not in prev:
                prev[nb] = cur
                queue.append(nb)
    raise AssertionError("nodes in different tree components")


def seeded_graph(i: int, max_n: int = 10) -> Graph:
    """Deterministic corpus member i for the acceptance suite."""
    n = 3 + i % (max_n - 2)
    p = (0.15, 0.3, 0.5, 0.75)[i % 4]
    return random_connected(n, p, seed=1000 + i)


def random_subset(rng: random.Random, n: int, max_size=None) -> set[int]:
    size = rng.randint(0, n if max_size is None else min(max_size, n))
    return set(rng.sample(range(n), size))


def graphs(min_n: int = 1, max_n: int = 9):
    """Hypothesis strategy: seeded connected graphs."""
    return st.builds(
        random_connected,
        st.integers(min_n, max_n),
        st.sampled_from([0.1, 0.2, 0.35, 0.6, 0.9]),
        st.integers(0, 10**6),
    )


@st.composite
def graph_and_set(draw, min_n: int = 2, max_n: int = 9):
    g = draw(graphs(min_n, max_n))
    members = draw(st.sets(st.integers(0, g.n - 1), max_size=g.n))
    return g, members
