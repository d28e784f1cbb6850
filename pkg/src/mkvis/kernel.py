"""Geodesic obstruction counting and the mutual k-visibility membership test.

A set X is mutual k-visible when every pair of its vertices has some shortest
path with at most k internal vertices belonging to X (the endpoints never
count). bfs_mkv computes, from one source, the minimum number of tracked
vertices on a shortest path to every target in a single BFS sweep; everything
else layers on top of it. oracle_min_internal_count recomputes the same
quantity by enumerating every geodesic outright and exists to cross-check the
kernel, never to replace it.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DisconnectedGraphError, GeodesicCapError, GraphInputError
from .graphs import (
    Graph,
    INFINITE,
    bfs_distances,
    check_vertex,
    check_vertex_set,
    is_infinite,
    require_connected,
)

__all__ = [
    "CheckReport",
    "DEFAULT_GEODESIC_CAP",
    "DUAL",
    "KernelResult",
    "OUTER",
    "REASON_DISCONNECTED",
    "REASON_PAIR",
    "TOTAL",
    "VARIANTS",
    "bfs_mkv",
    "check_variant",
    "internal_counts",
    "min_internal_count",
    "mkv_check",
    "oracle_min_internal_count",
]

TOTAL = "total"
OUTER = "outer"
DUAL = "dual"
VARIANTS = (TOTAL, OUTER, DUAL)

DEFAULT_GEODESIC_CAP = 10**6

REASON_PAIR = "pair_exceeds_tolerance"
REASON_DISCONNECTED = "members_in_different_components"


def _check_tolerance(k) -> int:
    if not isinstance(k, int) or isinstance(k, bool) or k < 0:
        raise GraphInputError(f"tolerance k must be a nonnegative integer, got {k!r}")
    return k


@dataclass(frozen=True)
class KernelResult:
    """Per-source output of the counting BFS.

    cnt[w] is the minimum, over shortest source-w paths, of the number of path
    vertices belonging to the tracked set other than the source itself; the
    target w is included in its own count when it is tracked. dp restricts cnt
    to the tracked set. Unreachable vertices hold the INFINITE sentinel.
    edge_touches counts adjacency-list steps for complexity assertions.
    """

    source: int
    dist: tuple
    cnt: tuple
    dp: dict
    edge_touches: int


def bfs_mkv(g: Graph, s, v: int) -> KernelResult:
    """Counting BFS from v tracking the members of s.

    One ordinary BFS fixes distances and discovery order; a second sweep in
    that order relaxes cnt along forward edges, adding one exactly when the
    edge enters a tracked vertex other than the source. Discovery order is
    nondecreasing in distance, so each cnt is final before it is propagated.
    """
    check_vertex(g, v)
    members = check_vertex_set(g, s)
    n = g.n
    adj = g.adj
    dist: list = [None] * n
    cnt: list = [None] * n
    dist[v] = 0
    cnt[v] = 0
    order = [v]
    touches = n
    head = 0
    while head < len(order):
        u = order[head]
        head += 1
        du1 = dist[u] + 1
        for w in adj[u]:
            touches += 1
            if dist[w] is None:
                dist[w] = du1
                order.append(w)
    in_s = [False] * n
    for q in members:
        in_s[q] = True
    for u in order:
        cu = cnt[u]
        if cu is None:
            continue
        du1 = dist[u] + 1
        for w in adj[u]:
            touches += 1
            if dist[w] == du1:
                cand = cu + 1 if (in_s[w] and w != v) else cu
                if cnt[w] is None or cand < cnt[w]:
                    cnt[w] = cand
    dist_t = tuple(INFINITE if d is None else d for d in dist)
    cnt_t = tuple(INFINITE if c is None else c for c in cnt)
    dp = {q: cnt_t[q] for q in members}
    return KernelResult(source=v, dist=dist_t, cnt=cnt_t, dp=dp, edge_touches=touches)


def _counts_and_touches(g: Graph, xs: frozenset, source: int):
    """Per-target minimum internal counts (endpoints excluded) from one source."""
    res = bfs_mkv(g, xs | {source}, source)
    counts: list = []
    for w, c in enumerate(res.cnt):
        if is_infinite(c):
            counts.append(INFINITE)
        elif w != source and w in xs:
            counts.append(c - 1)  # the kernel counted the target itself
        else:
            counts.append(c)
    return counts, res.edge_touches


def internal_counts(g: Graph, x, source: int) -> list:
    """For every target, the minimum number of x-members strictly inside some
    shortest path from source; INFINITE where unreachable."""
    xs = check_vertex_set(g, x)
    check_vertex(g, source)
    counts, _ = _counts_and_touches(g, xs, source)
    return counts


def min_internal_count(g: Graph, x, u: int, w: int) -> int:
    """Minimum number of x-members strictly between u and w on a shortest path."""
    xs = check_vertex_set(g, x)
    check_vertex(g, u)
    check_vertex(g, w)
    if u == w:
        return 0
    counts, _ = _counts_and_touches(g, xs, u)
    if is_infinite(counts[w]):
        raise DisconnectedGraphError(f"vertices {u} and {w} are in different components")
    return counts[w]


@dataclass(frozen=True)
class CheckReport:
    verdict: bool
    k: int
    offending_pair: tuple | None = None
    offending_count: int | None = None
    reason: str | None = None
    pair_counts: dict | None = None
    ops: int = 0


def mkv_check(g: Graph, s, k: int, collect_pair_counts: bool = False) -> CheckReport:
    """Decide whether s is a mutual k-visible set of g.

    Members in different components fail with a structured reason instead of
    an infinite count. With collect_pair_counts the full matrix of pairwise
    minimum internal counts is attached and no early exit happens.
    """
    _check_tolerance(k)
    members = sorted(check_vertex_set(g, s))
    pair_counts: dict | None = {} if collect_pair_counts else None
    if len(members) <= 1:
        return CheckReport(True, k, pair_counts=pair_counts)
    ops = 0
    first_run = bfs_mkv(g, s, members[0])
    ops += first_run.edge_touches
    for q in members[1:]:
        if is_infinite(first_run.dist[q]):
            return CheckReport(
                False, k,
                offending_pair=(members[0], q),
                reason=REASON_DISCONNECTED,
                ops=ops,
            )
    offending = None
    offending_count = None
    for v in members:
        run = first_run if v == members[0] else bfs_mkv(g, s, v)
        if v != members[0]:
            ops += run.edge_touches
        ops += len(members)
        for q in members:
            if q == v:
                continue
            internal = run.dp[q] - 1  # dp counts the tracked target itself
            if collect_pair_counts:
                pair_counts[(v, q) if v < q else (q, v)] = internal
            if internal > k and offending is None:
                offending = (v, q)
                offending_count = internal
                if not collect_pair_counts:
                    return CheckReport(
                        False, k,
                        offending_pair=offending,
                        offending_count=internal,
                        reason=REASON_PAIR,
                        ops=ops,
                    )
    if offending is not None:
        return CheckReport(
            False, k,
            offending_pair=offending,
            offending_count=offending_count,
            reason=REASON_PAIR,
            pair_counts=pair_counts,
            ops=ops,
        )
    return CheckReport(True, k, pair_counts=pair_counts, ops=ops)


def check_variant(g: Graph, x, k: int, variant: str) -> CheckReport:
    """Total, outer or dual visibility check for the set x.

    total: every pair of vertices of g must be (x, k)-visible.
    outer: every pair inside x and every x-to-complement pair.
    dual:  every pair inside x and every pair inside the complement.
    All pair tests use minimum internal counts, endpoints never counted.
    """
    _check_tolerance(k)
    if not isinstance(variant, str) or variant.lower() not in VARIANTS:
        raise GraphInputError(f"variant must be one of {VARIANTS}, got {variant!r}")
    variant = variant.lower()
    require_connected(g)
    xs = check_vertex_set(g, x)
    n = g.n
    inside = sorted(xs)
    outside = [v for v in range(n) if v not in xs]

    if variant == TOTAL:
        sweeps = [(list(range(n)), lambda v: range(v + 1, n))]
    elif variant == OUTER:
        # each within-x pair once (larger ids skipped), each cross pair from its x side
        sweeps = [(inside, lambda v: (w for w in range(n) if w != v and (w not in xs or w > v)))]
    else:
        sweeps = [
            (inside, lambda v: (w for w in inside if w > v)),
            (outside, lambda v: (w for w in outside if w > v)),
        ]

    ops = 0
    for sources, targets in sweeps:
        for v in sources:
            counts, touches = _counts_and_touches(g, xs, v)
            ops += touches
            for w in targets(v):
                ops += 1
                if counts[w] > k:
                    return CheckReport(
                        False, k,
                        offending_pair=(v, w),
                        offending_count=counts[w],
                        reason=REASON_PAIR,
                        ops=ops,
                    )
    return CheckReport(True, k, ops=ops)


def oracle_min_internal_count(g: Graph, x, u: int, w: int, cap: int = DEFAULT_GEODESIC_CAP) -> int:
    """Exact minimum internal count by enumerating every geodesic explicitly.

    Walks the shortest-path DAG between u and w by depth-first search and
    takes the minimum over complete paths. Refuses with GeodesicCapError once
    more than cap geodesics have been enumerated; it never approximates.
    """
    xs = check_vertex_set(g, x)
    check_vertex(g, u)
    check_vertex(g, w)
    if u == w:
        return 0
    du = bfs_distances(g, u)
    if is_infinite(du[w]):
        raise DisconnectedGraphError(f"vertices {u} and {w} are in different components")
    dw = bfs_distances(g, w)
    d = du[w]
    best = None
    paths = 0

    def extend(vertex, count):
        nonlocal best, paths
        if vertex == w:
            paths += 1
            if paths > cap:
                raise GeodesicCapError(f"more than {cap} geodesics between {u} and {w}")
            if best is None or count < best:
                best = count
            return
        nd = du[vertex] + 1
        for nb in g.adj[vertex]:
            if du[nb] == nd and dw[nb] == d - nd:
                extend(nb, count + (1 if (nb in xs and nb != w) else 0))

    extend(u, 0)
    return best
