"""Block-cutpoint structure and mutual k-visibility on block graphs.

A block graph is a connected graph whose blocks (maximal 2-connected
subgraphs, including bridges) are all cliques. Its block-cutpoint tree has a
node per articulation vertex and per block; a subset Z of tree nodes is
k-admissible when no tree path between two Z-nodes passes through more than k
selected articulation nodes. Expanding a k-admissible Z (all non-cut vertices
of its blocks plus its cut vertices) yields a mutual k-visible set, and every
mutual k-visible set contracts back to a k-admissible Z, so the maximum
expanded size equals mu_k.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import GraphInputError, SizeLimitError
from .graphs import Graph, require_connected
from .kernel import _check_tolerance, mkv_check
from .solvers import SolveResult

__all__ = [
    "AdmissibleWitness",
    "BlockCutTree",
    "DEFAULT_TREE_MAX_NODES",
    "block_decomposition",
    "block_node",
    "contract_set",
    "cut_node",
    "expand_admissible",
    "is_block_graph",
    "is_k_admissible",
    "mu_k_block",
]

DEFAULT_TREE_MAX_NODES = 30


def cut_node(v: int) -> tuple:
    """Tree node for the articulation vertex v."""
    return ("cut", v)


def block_node(i: int) -> tuple:
    """Tree node for the block with index i."""
    return ("block", i)


def _node_key(node):
    kind, idx = node
    return (0 if kind == "cut" else 1, idx)


class BlockCutTree:
    """Block-cutpoint tree of a connected graph.

    Nodes are ("cut", vertex) for articulation vertices and ("block", index)
    for blocks; an edge joins an articulation vertex to each block containing
    it. Rooted once at construction so tree paths are parent-pointer walks.
    """

    def __init__(self, n: int, articulation, blocks):
        self.n = n
        self.articulation = frozenset(articulation)
        self.blocks = tuple(tuple(sorted(b)) for b in blocks)
        cut_nodes = tuple(cut_node(v) for v in sorted(self.articulation))
        blk_nodes = tuple(block_node(i) for i in range(len(self.blocks)))
        self.nodes = cut_nodes + blk_nodes
        self.tree_edges = tuple(
            (v, i) for i, blk in enumerate(self.blocks) for v in blk if v in self.articulation
        )
        adjacency = {node: [] for node in self.nodes}
        for v, i in self.tree_edges:
            adjacency[cut_node(v)].append(block_node(i))
            adjacency[block_node(i)].append(cut_node(v))
        self._adjacency = {nd: tuple(sorted(nbrs, key=_node_key)) for nd, nbrs in adjacency.items()}
        if self.nodes and len(self.nodes) != len(self.tree_edges) + 1:
            raise RuntimeError("internal error: block-cutpoint structure is not a tree")
        self._parent = {}
        self._depth = {}
        if self.nodes:
            root = self.nodes[0]
            self._parent[root] = None
            self._depth[root] = 0
            frontier = [root]
            while frontier:
                nxt = []
                for node in frontier:
                    for nb in self._adjacency[node]:
                        if nb not in self._depth:
                            self._parent[nb] = node
                            self._depth[nb] = self._depth[node] + 1
                            nxt.append(nb)
                frontier = nxt
            if len(self._depth) != len(self.nodes):
                raise RuntimeError("internal error: block-cutpoint tree is disconnected")
        proj = {}
        for v in self.articulation:
            proj[v] = cut_node(v)
        for i, blk in enumerate(self.blocks):
            for v in blk:
                if v not in self.articulation:
                    proj[v] = block_node(i)
        if len(proj) != n:
            raise RuntimeError("internal error: block cover misses a vertex")
        self._projection = proj

    @property
    def node_count(self) -> int:
        return len(self.nodes)

    def neighbors(self, node) -> tuple:
        self._check_node(node)
        return self._adjacency[node]

    def projection(self, v: int) -> tuple:
        """Tree node a vertex maps to: its cut node, or its unique block."""
        if not isinstance(v, int) or not 0 <= v < self.n:
            raise GraphInputError(f"vertex id {v!r} out of range [0, {self.n})")
        return self._projection[v]

    def _check_node(self, node):
        if node not in self._adjacency:
            raise GraphInputError(f"{node!r} is not a node of this tree")

    def tree_path(self, a, b) -> list:
        """Node sequence of the unique tree path from a to b, inclusive."""
        self._check_node(a)
        self._check_node(b)
        if a == b:
            return [a]
        up_a = [a]
        up_b = [b]
        x, y = a, b
        while self._depth[x] > self._depth[y]:
            x = self._parent[x]
            up_a.append(x)
        while self._depth[y] > self._depth[x]:
            y = self._parent[y]
            up_b.append(y)
        while x != y:
            x = self._parent[x]
            up_a.append(x)
            y = self._parent[y]
            up_b.append(y)
        up_b.pop()  # x == y: drop the duplicated meeting node
        return up_a + up_b[::-1]

    def to_dict(self) -> dict:
        return {
            "articulation": sorted(self.articulation),
            "blocks": [list(b) for b in self.blocks],
            "tree_edges": [[v, i] for v, i in self.tree_edges],
            "projection": [_node_obj(self._projection[v]) for v in range(self.n)],
        }


def _node_obj(node) -> dict:
    kind, idx = node
    if kind == "cut":
        return {"kind": "cut", "vertex": idx}
    return {"kind": "block", "index": idx}


def block_decomposition(g: Graph) -> BlockCutTree:
    """Blocks and articulation vertices by iterative lowpoint depth-first search."""
    require_connected(g)
    n = g.n
    if n == 0:
        raise GraphInputError("graph has no vertices")
    if n == 1:
        return BlockCutTree(1, (), ((0,),))
    adj = g.adj
    disc = [-1] * n
    low = [0] * n
    parent = [-1] * n
    next_i = [0] * n
    articulation: set = set()
    blocks: list = []
    edge_stack: list = []
    root = 0
    disc[root] = low[root] = 0
    timer = 1
    root_children = 0
    stack = [root]
    while stack:
        u = stack[-1]
        if next_i[u] < len(adj[u]):
            w = adj[u][next_i[u]]
            next_i[u] += 1
            if w == parent[u]:
                continue
            if disc[w] == -1:
                parent[w] = u
                if u == root:
                    root_children += 1
                disc[w] = low[w] = timer
                timer += 1
                edge_stack.append((u, w))
                stack.append(w)
            elif disc[w] < disc[u]:  # back edge to an ancestor, push once
                edge_stack.append((u, w))
                if disc[w] < low[u]:
                    low[u] = disc[w]
        else:
            stack.pop()
            p = parent[u]
            if p == -1:
                continue
            if low[u] < low[p]:
                low[p] = low[u]
            if low[u] >= disc[p]:
                verts = set()
                while True:
                    e = edge_stack.pop()
                    verts.update(e)
                    if e == (p, u):
                        break
                blocks.append(verts)
                if p != root or root_children > 1:
                    articulation.add(p)
    return BlockCutTree(n, articulation, blocks)


def _blocks_are_cliques(g: Graph, t: BlockCutTree) -> bool:
    neigh = [set(a) for a in g.adj]
    for blk in t.blocks:
        for i, u in enumerate(blk):
            for w in blk[i + 1 :]:
                if w not in neigh[u]:
                    return False
    return True


def is_block_graph(g: Graph) -> bool:
    """True when every block of the connected graph g induces a clique."""
    return _blocks_are_cliques(g, block_decomposition(g))


@dataclass(frozen=True)
class AdmissibleWitness:
    z: frozenset
    k: int
    violating_pair: tuple | None
    violating_count: int | None

    @property
    def admissible(self) -> bool:
        return self.violating_pair is None


def _check_nodes(t: BlockCutTree, z) -> frozenset:
    znodes = frozenset(z)
    for node in znodes:
        t._check_node(node)
    return znodes


def is_k_admissible(t: BlockCutTree, z, k: int) -> AdmissibleWitness:
    """Check that every tree path between two Z-nodes has at most k internal
    nodes that are selected articulation nodes; reports the first violation."""
    _check_tolerance(k)
    znodes = _check_nodes(t, z)
    zcut = {node for node in znodes if node[0] == "cut"}
    ordered = sorted(znodes, key=_node_key)
    for i, a in enumerate(ordered):
        for b in ordered[i + 1 :]:
            path = t.tree_path(a, b)
            count = sum(1 for nd in path[1:-1] if nd in zcut)
            if count > k:
                return AdmissibleWitness(znodes, k, (a, b), count)
    return AdmissibleWitness(znodes, k, None, None)


def expand_admissible(t: BlockCutTree, z) -> set[int]:
    """Vertex set of Z: non-articulation vertices of selected blocks plus the
    selected articulation vertices."""
    znodes = _check_nodes(t, z)
    out: set = set()
    for kind, idx in znodes:
        if kind == "cut":
            out.add(idx)
        else:
            out.update(v for v in t.blocks[idx] if v not in t.articulation)
    return out


def contract_set(t: BlockCutTree, x) -> set:
    """Tree nodes of a vertex set: its articulation vertices as cut nodes plus
    every block owning one of its non-articulation vertices."""
    xs = frozenset(x)
    for v in xs:
        if not isinstance(v, int) or not 0 <= v < t.n:
            raise GraphInputError(f"vertex id {v!r} out of range [0, {t.n})")
    z: set = set()
    for v in xs:
        if v in t.articulation:
            z.add(cut_node(v))
    for i, blk in enumerate(t.blocks):
        if any(v in xs and v not in t.articulation for v in blk):
            z.add(block_node(i))
    return z


def mu_k_block(g: Graph, k: int, max_nodes: int = DEFAULT_TREE_MAX_NODES):
    """Exact mu_k of a block graph via k-admissible subsets of its tree.

    |X_Z| is additive over nodes (cut nodes weigh 1, block nodes weigh their
    non-articulation vertex count), and admissibility is downward-closed, so
    branch and bound with pairwise path counts maintained incrementally works;
    zero-weight nodes sort last and are skipped by the weight prune.
    """
    _check_tolerance(k)
    t = block_decomposition(g)
    if not _blocks_are_cliques(g, t):
        raise GraphInputError("not a block graph: some block is not a clique")
    if t.node_count > max_nodes:
        raise SizeLimitError(
            f"mu_k_block limited to {max_nodes} tree nodes, got {t.node_count}; raise max_nodes to override"
        )
    arts = t.articulation

    def weight(node):
        kind, idx = node
        if kind == "cut":
            return 1
        return sum(1 for v in t.blocks[idx] if v not in arts)

    order = sorted(t.nodes, key=lambda nd: (-weight(nd), _node_key(nd)))
    wmap = {nd: weight(nd) for nd in t.nodes}
    total_weight = sum(wmap.values())

    counts: dict = {}
    zcut: set = set()
    current: list = []

    def pair_key(a, b):
        return (a, b) if _node_key(a) <= _node_key(b) else (b, a)

    def internal_on(node, a, b) -> bool:
        path = t.tree_path(a, b)
        return node in path[1:-1]

    def probe(node) -> bool:
        for other in current:
            path = t.tree_path(node, other)
            if sum(1 for nd in path[1:-1] if nd in zcut) > k:
                return False
        if node[0] == "cut":
            for (a, b), c in counts.items():
                if c >= k and internal_on(node, a, b):
                    return False
        return True

    def apply(node):
        changed = []
        added = []
        if node[0] == "cut":
            for pair in list(counts):
                if internal_on(node, *pair):
                    counts[pair] += 1
                    changed.append(pair)
        for other in current:
            path = t.tree_path(node, other)
            c = sum(1 for nd in path[1:-1] if nd in zcut)
            pair = pair_key(node, other)
            counts[pair] = c
            added.append(pair)
        current.append(node)
        if node[0] == "cut":
            zcut.add(node)
        return changed, added

    def undo(node, delta):
        changed, added = delta
        for pair in changed:
            counts[pair] -= 1
        for pair in added:
            del counts[pair]
        current.pop()
        zcut.discard(node)

    best_w = -1
    best_z: frozenset = frozenset()
    nodes_explored = 0

    def walk(cands, cw) -> bool:
        nonlocal best_w, best_z, nodes_explored
        nodes_explored += 1
        if cw > best_w:
            best_w = cw
            best_z = frozenset(current)
            if best_w >= total_weight:
                return True
        suffix = [0] * (len(cands) + 1)
        for i in range(len(cands) - 1, -1, -1):
            suffix[i] = suffix[i + 1] + wmap[cands[i]]
        for idx, node in enumerate(cands):
            if cw + suffix[idx] <= best_w:
                break
            delta = apply(node)
            child = [w for w in cands[idx + 1 :] if probe(w)]
            stop = walk(child, cw + wmap[node])
            undo(node, delta)
            if stop:
                return True
        return False

    walk(list(order), 0)
    witness = expand_admissible(t, best_z)
    if len(witness) != best_w:
        raise RuntimeError("internal error: expanded witness size mismatch")
    if not mkv_check(g, witness, k).verdict:
        raise RuntimeError("internal error: mu_k_block witness failed verification")
    return SolveResult(best_w, frozenset(witness), nodes_explored)
