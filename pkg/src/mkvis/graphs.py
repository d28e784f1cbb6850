"""Undirected simple graphs with dense integer vertices 0..n-1.

Construction goes through build_graph (or the generators), which validates the
input and returns an immutable Graph. Distances, metric summaries, geodesic
convexity, a handful of deterministic generators and the edge-list text format
used by the command line tool all live here.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass
from itertools import combinations

from .errors import DisconnectedGraphError, GraphInputError

__all__ = [
    "INFINITE",
    "Graph",
    "Infinite",
    "MetricSummary",
    "all_pairs_distances",
    "bfs_distances",
    "build_graph",
    "check_vertex",
    "check_vertex_set",
    "complete_bipartite",
    "complete_graph",
    "convex_hull",
    "cycle_graph",
    "diametral_path",
    "format_edge_list",
    "induced_subgraph",
    "is_connected",
    "is_infinite",
    "is_isometric_path",
    "metric_summary",
    "parse_edge_list",
    "path_graph",
    "random_block_graph",
    "random_connected",
    "require_connected",
    "shortest_path",
]


class Infinite:
    """Sentinel for "no finite value": unreachable distance, acyclic girth.

    Deliberately supports no arithmetic, so INFINITE + 1 raises TypeError and a
    disconnected input can never wrap silently into a finite answer.
    """

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "INFINITE"

    def __reduce__(self):
        return (Infinite, ())


INFINITE = Infinite()


def is_infinite(value) -> bool:
    return value is INFINITE


@dataclass(frozen=True)
class Graph:
    """Immutable undirected simple graph with sorted adjacency lists."""

    n: int
    adj: tuple[tuple[int, ...], ...]
    m: int

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adj[v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def edges(self):
        """Yield each edge once as (u, v) with u < v, in sorted order."""
        for u in range(self.n):
            for v in self.adj[u]:
                if u < v:
                    yield (u, v)


def check_vertex(g: Graph, v) -> int:
    if not isinstance(v, int) or isinstance(v, bool) or not 0 <= v < g.n:
        raise GraphInputError(f"vertex id {v!r} out of range [0, {g.n})")
    return v


def check_vertex_set(g: Graph, vertices) -> frozenset[int]:
    return frozenset(check_vertex(g, v) for v in vertices)


def build_graph(n: int, edges) -> Graph:
    """Validate and build a Graph.

    Rejects out-of-range ids, self-loops and duplicate edges (in either
    orientation), each reported with the offending pair.
    """
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise GraphInputError(f"vertex count must be a nonnegative integer, got {n!r}")
    adj: list[list[int]] = [[] for _ in range(n)]
    seen = set()
    count = 0
    for u, v in edges:
        if (
            not isinstance(u, int)
            or not isinstance(v, int)
            or isinstance(u, bool)
            or isinstance(v, bool)
            or not (0 <= u < n and 0 <= v < n)
        ):
            raise GraphInputError(f"edge ({u!r}, {v!r}) has an endpoint outside [0, {n})")
        if u == v:
            raise GraphInputError(f"self-loop ({u}, {v}) is not allowed")
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise GraphInputError(f"duplicate edge ({u}, {v})")
        seen.add(key)
        adj[u].append(v)
        adj[v].append(u)
        count += 1
    return Graph(n=n, adj=tuple(tuple(sorted(a)) for a in adj), m=count)


def bfs_distances(g: Graph, v: int) -> list:
    """Distances from v; unreachable vertices get the INFINITE sentinel."""
    check_vertex(g, v)
    dist: list = [None] * g.n
    dist[v] = 0
    queue = deque([v])
    while queue:
        u = queue.popleft()
        du1 = dist[u] + 1
        for w in g.adj[u]:
            if dist[w] is None:
                dist[w] = du1
                queue.append(w)
    return [INFINITE if d is None else d for d in dist]


def all_pairs_distances(g: Graph) -> list:
    return [bfs_distances(g, v) for v in range(g.n)]


def shortest_path(g: Graph, u: int, v: int) -> list[int]:
    """One geodesic from u to v inclusive, taking the smallest-id step each time."""
    check_vertex(g, u)
    check_vertex(g, v)
    dist_v = bfs_distances(g, v)
    if is_infinite(dist_v[u]):
        raise DisconnectedGraphError(f"vertices {u} and {v} are in different components")
    path = [u]
    cur = u
    while cur != v:
        cur = min(w for w in g.adj[cur] if dist_v[w] == dist_v[cur] - 1)
        path.append(cur)
    return path


def is_connected(g: Graph) -> bool:
    if g.n <= 1:
        return True
    return not any(is_infinite(d) for d in bfs_distances(g, 0))


def require_connected(g: Graph) -> None:
    if not is_connected(g):
        raise DisconnectedGraphError("operation requires a connected graph")


@dataclass(frozen=True)
class MetricSummary:
    diameter: "int | Infinite"
    girth: "int | Infinite"
    max_degree: int


def metric_summary(g: Graph) -> MetricSummary:
    """Diameter, girth and maximum degree; INFINITE marks disconnected/acyclic."""
    n = g.n
    max_degree = max((len(a) for a in g.adj), default=0)
    if n == 0:
        return MetricSummary(INFINITE, INFINITE, 0)
    diameter = 0
    disconnected = False
    girth = None
    for root in range(n):
        dist: list = [None] * n
        parent = [-1] * n
        dist[root] = 0
        queue = deque([root])
        reached = 1
        while queue:
            u = queue.popleft()
            du = dist[u]
            if du > diameter:
                diameter = du
            for w in g.adj[u]:
                if dist[w] is None:
                    dist[w] = du + 1
                    parent[w] = u
                    queue.append(w)
                    reached += 1
                elif parent[u] != w:
                    # non-tree edge closes a walk of length dist[u]+dist[w]+1
                    # that contains a cycle no longer than itself
                    cycle = du + dist[w] + 1
                    if girth is None or cycle < girth:
                        girth = cycle
        if reached < n:
            disconnected = True
    return MetricSummary(
        INFINITE if disconnected else diameter,
        INFINITE if girth is None else girth,
        max_degree,
    )


def diametral_path(g: Graph) -> list[int]:
    """Some geodesic realizing the diameter of a connected graph."""
    require_connected(g)
    if g.n == 0:
        raise GraphInputError("empty graph has no diametral path")
    best = (0, 0, 0)
    for u in range(g.n):
        dist = bfs_distances(g, u)
        for v in range(g.n):
            if dist[v] > best[0]:
                best = (dist[v], u, v)
    return shortest_path(g, best[1], best[2])


def convex_hull(g: Graph, s) -> set[int]:
    """Smallest geodesically convex superset: fixpoint of the interval operator."""
    require_connected(g)
    members = check_vertex_set(g, s)
    if not members:
        raise GraphInputError("convex hull of an empty set is undefined")
    dist = all_pairs_distances(g)
    hull = set(members)
    while True:
        inside = sorted(hull)
        added = []
        for w in range(g.n):
            if w in hull:
                continue
            dw = dist[w]
            if any(
                dist[u][w] + dw[v] == dist[u][v]
                for i, u in enumerate(inside)
                for v in inside[i + 1 :]
            ):
                added.append(w)
        if not added:
            return hull
        hull.update(added)


def is_isometric_path(g: Graph, path) -> bool:
    """True when the vertex sequence is a path realizing all pairwise distances."""
    seq = [check_vertex(g, v) for v in path]
    for a, b in zip(seq, seq[1:]):
        if not g.has_edge(a, b):
            raise GraphInputError(f"not a path: {a} and {b} are not adjacent")
    if len(seq) <= 1:
        return True
    dist = {v: bfs_distances(g, v) for v in set(seq)}
    return all(
        dist[seq[i]][seq[j]] == j - i
        for i in range(len(seq))
        for j in range(i + 1, len(seq))
    )


def induced_subgraph(g: Graph, vertices) -> tuple[Graph, tuple[int, ...]]:
    """Subgraph induced on the given vertices, relabeled to 0..len-1.

    Returns (subgraph, original_ids) where original_ids[new] is the old id.
    """
    ids = tuple(sorted(check_vertex_set(g, vertices)))
    index = {old: new for new, old in enumerate(ids)}
    edges = [
        (index[u], index[v])
        for u, v in g.edges()
        if u in index and v in index
    ]
    return build_graph(len(ids), edges), ids


# ---------------------------------------------------------------------------
# generators
# ---------------------------------------------------------------------------

def path_graph(n: int) -> Graph:
    if not isinstance(n, int) or n < 1:
        raise GraphInputError(f"path needs at least one vertex, got {n!r}")
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if not isinstance(n, int) or n < 3:
        raise GraphInputError(f"cycle needs at least three vertices, got {n!r}")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    if not isinstance(n, int) or n < 1:
        raise GraphInputError(f"complete graph needs at least one vertex, got {n!r}")
    return build_graph(n, list(combinations(range(n), 2)))


def complete_bipartite(m: int, n: int) -> Graph:
    if not isinstance(m, int) or not isinstance(n, int) or m < 1 or n < 1:
        raise GraphInputError(f"both sides need at least one vertex, got {m!r}, {n!r}")
    return build_graph(m + n, [(i, m + j) for i in range(m) for j in range(n)])


def random_connected(n: int, edge_probability: float, seed: int) -> Graph:
    """Random connected graph: random spanning tree plus Bernoulli extra edges."""
    if not isinstance(n, int) or n < 1:
        raise GraphInputError(f"need at least one vertex, got {n!r}")
    if not 0.0 <= edge_probability <= 1.0:
        raise GraphInputError(f"edge probability must be in [0, 1], got {edge_probability!r}")
    rng = random.Random(seed)
    edges = set()
    for v in range(1, n):
        edges.add((rng.randrange(v), v))
    for u in range(n):
        for v in range(u + 1, n):
            if (u, v) not in edges and rng.random() < edge_probability:
                edges.add((u, v))
    return build_graph(n, sorted(edges))


def random_block_graph(block_count: int, max_block_size: int, seed: int) -> Graph:
    """Random connected graph in which every block is a clique.

    Grown by attaching clique blocks of random size at random existing
    vertices, so consecutive blocks share exactly one cut vertex.
    """
    if not isinstance(block_count, int) or block_count < 1:
        raise GraphInputError(f"need at least one block, got {block_count!r}")
    if not isinstance(max_block_size, int) or max_block_size < 2:
        raise GraphInputError(f"blocks need at least two vertices, got {max_block_size!r}")
    rng = random.Random(seed)
    edges = []
    size = rng.randint(2, max_block_size)
    edges.extend(combinations(range(size), 2))
    total = size
    for _ in range(block_count - 1):
        anchor = rng.randrange(total)
        size = rng.randint(2, max_block_size)
        members = [anchor] + list(range(total, total + size - 1))
        edges.extend(combinations(members, 2))
        total += size - 1
    return build_graph(total, edges)


# ---------------------------------------------------------------------------
# edge-list text format: "n m" header, then m lines "u v"; '#' starts a comment
# ---------------------------------------------------------------------------

def parse_edge_list(text: str) -> Graph:
    """Parse the edge-list format, reporting 1-based line numbers on errors."""
    n = declared_m = None
    edges: list[tuple[int, int]] = []
    seen = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if len(fields) != 2:
            raise GraphInputError(f"line {lineno}: expected two whitespace-separated values")
        try:
            a, b = int(fields[0]), int(fields[1])
        except ValueError:
            raise GraphInputError(f"line {lineno}: values must be integers") from None
        if n is None:
            if a < 0 or b < 0:
                raise GraphInputError(f"line {lineno}: header 'n m' values must be nonnegative")
            n, declared_m = a, b
            continue
        if len(edges) == declared_m:
            raise GraphInputError(f"line {lineno}: more edges than the declared {declared_m}")
        if not (0 <= a < n and 0 <= b < n):
            raise GraphInputError(f"line {lineno}: vertex id out of range [0, {n})")
        if a == b:
            raise GraphInputError(f"line {lineno}: self-loop ({a}, {b}) is not allowed")
        key = (a, b) if a < b else (b, a)
        if key in seen:
            raise GraphInputError(f"line {lineno}: duplicate edge ({a}, {b})")
        seen.add(key)
        edges.append((a, b))
    if n is None:
        raise GraphInputError("empty input: missing 'n m' header line")
    if len(edges) != declared_m:
        raise GraphInputError(f"declared {declared_m} edges but found {len(edges)}")
    return build_graph(n, edges)


def format_edge_list(g: Graph, comments=()) -> str:
    lines = [f"# {c}" for c in comments]
    lines.append(f"{g.n} {g.m}")
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"
