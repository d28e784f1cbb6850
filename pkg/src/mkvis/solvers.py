"""Exact solvers and bounds for mutual k-visibility numbers.

mu_k and visibility_polynomial walk the downward-closed family of mutual
k-visible sets with filtered candidate lists; mu_k_variant enumerates plainly
because the dual family is not downward-closed. All solvers are desk-scale
exhaustive searches with configurable size limits and refuse larger inputs.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import GraphInputError, SizeLimitError
from .graphs import (
    Graph,
    INFINITE,
    Infinite,
    all_pairs_distances,
    check_vertex_set,
    convex_hull,
    induced_subgraph,
    is_infinite,
    is_isometric_path,
    metric_summary,
    require_connected,
)
from .kernel import (
    _check_tolerance,
    _counts_and_touches,
    check_variant,
    mkv_check,
)

__all__ = [
    "BoundsRecord",
    "DEFAULT_ENUM_MAX_N",
    "DEFAULT_GP_MAX_N",
    "DEFAULT_MU_MAX_N",
    "Polynomial",
    "SolveResult",
    "bounds",
    "cycle_extremal_set",
    "gp_number",
    "hull_cover_bound",
    "mu_k",
    "mu_k_variant",
    "visibility_polynomial",
]

DEFAULT_MU_MAX_N = 24
DEFAULT_ENUM_MAX_N = 18
DEFAULT_GP_MAX_N = 20


@dataclass(frozen=True)
class SolveResult:
    value: int
    witness: frozenset
    nodes_explored: int


class _IncrementalChecker:
    """Feasibility of growing a mutual k-visible set one vertex at a time.

    Given a feasible current set, tests current + {v}: one kernel run from v
    covers the new pairs, then every member a with some b such that v lies on
    an a-b geodesic (distance test) is re-run, because adding v can raise the
    minimum count of old pairs. Pairs with v on none of their geodesics keep
    their counts, so their old verdict stands.
    """

    def __init__(self, g: Graph, k: int, dist):
        self.g = g
        self.k = k
        self.dist = dist

    def feasible_extension(self, current, v) -> bool:
        k = self.k
        if len(current) + 1 <= k + 2:
            return True  # a geodesic holds at most |X|-2 internal members
        xs = frozenset(current) | {v}
        counts, _ = _counts_and_touches(self.g, xs, v)
        for q in current:
            if counts[q] > k:
                return False
        dist = self.dist
        dv = dist[v]
        cur = list(current)
        for a in cur:
            da = dist[a]
            dav = da[v]
            if any(b != a and dav + dv[b] == da[b] for b in cur):
                counts_a, _ = _counts_and_touches(self.g, xs, a)
                for q in xs:
                    if q != a and counts_a[q] > k:
                        return False
        return True


def _cheap_upper_bound(g: Graph, k: int) -> int:
    n = g.n
    ms = metric_summary(g)
    ub = min(n, n - ms.diameter + k + 1)
    if not is_infinite(ms.girth):
        ub = min(ub, n - ms.girth + 2 * k + 3)
    return ub


def mu_k(g: Graph, k: int, max_n: int = DEFAULT_MU_MAX_N) -> SolveResult:
    """Exact mutual k-visibility number with a verified witness.

    Branch and bound over the downward-closed family: candidates are filtered
    at every level, branches are cut when the surviving candidates cannot beat
    the incumbent, and the whole search stops once the incumbent meets the
    cheap diameter/girth upper bound.
    """
    _check_tolerance(k)
    require_connected(g)
    n = g.n
    if n > max_n:
        raise SizeLimitError(f"mu_k limited to {max_n} vertices, got {n}; raise max_n to override")
    if n == 0:
        return SolveResult(0, frozenset(), 0)
    dist = all_pairs_distances(g)
    ub = _cheap_upper_bound(g, k)
    checker = _IncrementalChecker(g, k, dist)
    order = sorted(range(n), key=lambda u: (-g.degree(u), u))
    best = 0
    best_set: frozenset = frozenset()
    nodes = 0
    current: set = set()

    def walk(cands) -> bool:
        nonlocal best, best_set, nodes
        nodes += 1
        if len(current) > best:
            best = len(current)
            best_set = frozenset(current)
            if best >= ub:
                return True
        for idx, v in enumerate(cands):
            if len(current) + len(cands) - idx <= best:
                break
            current.add(v)
            child = [w for w in cands[idx + 1 :] if checker.feasible_extension(current, w)]
            stop = walk(child)
            current.discard(v)
            if stop:
                return True
        return False

    walk(order)
    if not mkv_check(g, best_set, k).verdict:
        raise RuntimeError("internal error: mu_k witness failed verification")
    return SolveResult(best, best_set, nodes)


def mu_k_variant(g: Graph, k: int, variant: str, max_n: int = DEFAULT_ENUM_MAX_N) -> SolveResult:
    """Largest total/outer/dual k-visibility set by plain enumeration.

    The dual family is not downward-closed, so no heredity pruning is used;
    subsets are tried in descending cardinality starting from the plain upper
    bound (every variant set must have all its internal pairs visible, so the
    plain bounds cap the variants too).
    """
    _check_tolerance(k)
    require_connected(g)
    n = g.n
    if n > max_n:
        raise SizeLimitError(f"mu_k_variant limited to {max_n} vertices, got {n}; raise max_n to override")
    if n == 0:
        return SolveResult(0, frozenset(), 0)
    cap = _cheap_upper_bound(g, k)
    nodes = 0
    for size in range(cap, -1, -1):
        for comb in combinations(range(n), size):
            nodes += 1
            if check_variant(g, comb, k, variant).verdict:
                return SolveResult(size, frozenset(comb), nodes)
    raise RuntimeError("unreachable: the empty set satisfies every variant")


def gp_number(g: Graph, max_n: int = DEFAULT_GP_MAX_N) -> SolveResult:
    """Largest set with no member on any geodesic between two other members."""
    require_connected(g)
    n = g.n
    if n > max_n:
        raise SizeLimitError(f"gp_number limited to {max_n} vertices, got {n}; raise max_n to override")
    if n == 0:
        return SolveResult(0, frozenset(), 0)
    dist = all_pairs_distances(g)
    order = sorted(range(n), key=lambda u: (-g.degree(u), u))
    best = 0
    best_set: frozenset = frozenset()
    nodes = 0
    current: list = []

    def placeable(v) -> bool:
        dv = dist[v]
        for i, a in enumerate(current):
            da = dist[a]
            for b in current[i + 1 :]:
                if da[v] + dv[b] == da[b]:
                    return False  # v strictly between a and b
                if dv[a] + da[b] == dv[b]:
                    return False  # a strictly between v and b
                if dv[b] + dist[b][a] == dv[a]:
                    return False  # b strictly between v and a
        return True

    def walk(cands) -> bool:
        nonlocal best, best_set, nodes
        nodes += 1
        if len(current) > best:
            best = len(current)
            best_set = frozenset(current)
            if best >= n:
                return True
        for idx, v in enumerate(cands):
            if len(current) + len(cands) - idx <= best:
                break
            current.append(v)
            child = [w for w in cands[idx + 1 :] if placeable(w)]
            stop = walk(child)
            current.pop()
            if stop:
                return True
        return False

    walk(order)
    return SolveResult(best, best_set, nodes)


@dataclass(frozen=True)
class BoundsRecord:
    """Upper and lower estimates for the k-visibility number of one graph."""

    diameter_bound: int
    girth_bound: "int | Infinite"
    trivial_bound: int
    isometric_bound: int
    degree_lower: int
    gp_lower: int | None

    def upper(self) -> int:
        ub = min(self.diameter_bound, self.trivial_bound, self.isometric_bound)
        if not is_infinite(self.girth_bound):
            ub = min(ub, self.girth_bound)
        return ub

    def lower(self) -> int:
        lo = self.degree_lower
        if self.gp_lower is not None:
            lo = max(lo, self.gp_lower)
        return lo


def bounds(g: Graph, k: int, isometric_path=None, gp_max_n: int = DEFAULT_GP_MAX_N) -> BoundsRecord:
    """Bound record for mu_k: diameter, girth, isometric-path and trivial upper
    bounds, maximum-degree and general-position lower bounds.

    Without an explicit isometric path the bound defaults to a diametral
    geodesic, which is always isometric, making it equal the diameter bound.
    gp_lower is omitted (None) when the graph exceeds gp_max_n.
    """
    _check_tolerance(k)
    require_connected(g)
    n = g.n
    if n == 0:
        raise GraphInputError("bounds need at least one vertex")
    ms = metric_summary(g)
    d = ms.diameter
    if isometric_path is None:
        ell = d
    else:
        if not is_isometric_path(g, isometric_path):
            raise GraphInputError("supplied path is not isometric")
        ell = len(list(isometric_path)) - 1
    return BoundsRecord(
        diameter_bound=n - d + k + 1,
        girth_bound=INFINITE if is_infinite(ms.girth) else n - ms.girth + 2 * k + 3,
        trivial_bound=n,
        isometric_bound=n - ell + k + 1,
        degree_lower=ms.max_degree + 1 if k >= 1 else ms.max_degree,
        gp_lower=gp_number(g).value if n <= gp_max_n else None,
    )


@dataclass(frozen=True)
class Polynomial:
    """Counts of mutual k-visible sets by cardinality; coefficient i is the
    number of such sets of size i. The top nonzero index equals mu_k."""

    coefficients: tuple[int, ...]

    def degree(self) -> int:
        top = 0
        for i, c in enumerate(self.coefficients):
            if c:
                top = i
        return top

    def __str__(self) -> str:
        terms = []
        for i, c in enumerate(self.coefficients):
            if not c:
                continue
            if i == 0:
                terms.append(str(c))
            elif i == 1:
                terms.append("x" if c == 1 else f"{c}x")
            else:
                terms.append(f"x^{i}" if c == 1 else f"{c}x^{i}")
        return " + ".join(terms) if terms else "0"


def visibility_polynomial(g: Graph, k: int, max_n: int = DEFAULT_ENUM_MAX_N) -> Polynomial:
    """Count every mutual k-visible set, grouped by cardinality.

    The family is downward-closed, so a depth-first walk with filtered
    candidate lists visits each feasible set exactly once.
    """
    _check_tolerance(k)
    require_connected(g)
    n = g.n
    if n > max_n:
        raise SizeLimitError(f"visibility_polynomial limited to {max_n} vertices, got {n}; raise max_n to override")
    coeffs = [0] * (n + 1)
    if n == 0:
        return Polynomial((1,))
    dist = all_pairs_distances(g)
    checker = _IncrementalChecker(g, k, dist)
    current: set = set()

    def walk(cands):
        coeffs[len(current)] += 1
        for idx, v in enumerate(cands):
            current.add(v)
            child = [w for w in cands[idx + 1 :] if checker.feasible_extension(current, w)]
            walk(child)
            current.discard(v)

    walk(list(range(n)))
    return Polynomial(tuple(coeffs))


def cycle_extremal_set(n: int, k: int) -> set[int]:
    """A largest mutual k-visible set on the n-cycle with vertices 0..n-1.

    Two consecutive runs of sizes k+2 and k+1 separated by gaps of floor and
    ceil of (n-2k-3)/2 unselected vertices; 2k+3 vertices in total.
    """
    _check_tolerance(k)
    if not isinstance(n, int) or n < 3:
        raise GraphInputError(f"cycle needs at least three vertices, got {n!r}")
    if 2 * k + 3 > n:
        raise GraphInputError(
            f"2k+3 = {2 * k + 3} exceeds n = {n}: every vertex subset of the "
            f"{n}-cycle is mutual {k}-visible, take all of V instead"
        )
    gap = (n - (2 * k + 3)) // 2
    first = set(range(k + 2))
    start = k + 2 + gap
    second = set(range(start, start + k + 1))
    return first | second


def hull_cover_bound(g: Graph, parts, k: int, max_n: int = DEFAULT_MU_MAX_N) -> int:
    """Sum of mu_k over the convex hulls of a vertex cover of g.

    The parts must cover every vertex (overlaps allowed); each hull induces a
    convex subgraph whose exact mu_k is solved separately. The sum is an upper
    bound for mu_k of g.
    """
    _check_tolerance(k)
    require_connected(g)
    part_sets = [check_vertex_set(g, p) for p in parts]
    covered: set = set()
    for p in part_sets:
        covered |= p
    if covered != set(range(g.n)):
        raise GraphInputError("parts do not cover every vertex")
    total = 0
    for p in part_sets:
        hull = convex_hull(g, p)
        sub, _ = induced_subgraph(g, hull)
        total += mu_k(sub, k, max_n=max_n).value
    return total
