"""Tree-cut decompositions, their width, and exact screewidth.

Tree vertices are called nodes and tree edges links, to keep them apart from
the vertices and edges of the decomposed graph.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import GraphError, SizeLimitError
from .families import c_nk, ctilde_nk
from .multigraph import Multigraph, bits, popcount, to_mask


@dataclass(frozen=True)
class TreeCutDecomposition:
    """A tree on nodes ``0..len(bags)-1`` with one bag (vertex mask) per node."""

    graph: Multigraph
    links: tuple[tuple[int, int], ...]
    bags: tuple[int, ...]

    @classmethod
    def build(cls, graph: Multigraph, links: Iterable[Sequence[int]], bags: Iterable) -> "TreeCutDecomposition":
        bag_masks = tuple(b if isinstance(b, int) else to_mask(b) for b in bags)
        d = cls(graph, tuple((int(a), int(b)) for a, b in links), bag_masks)
        d.validate()
        return d

    @property
    def num_nodes(self) -> int:
        return len(self.bags)

    def validate(self) -> None:
        t = self.num_nodes
        if t == 0:
            raise GraphError("a tree-cut decomposition needs at least one node")
        if len(self.links) != t - 1:
            raise GraphError(f"{t} nodes need {t - 1} links, got {len(self.links)}")
        parent = list(range(t))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for a, b in self.links:
            if not (0 <= a < t and 0 <= b < t) or a == b:
                raise GraphError(f"bad link {a}-{b}")
            ra, rb = find(a), find(b)
            if ra == rb:
                raise GraphError("links contain a cycle")
            parent[ra] = rb
        seen = 0
        for b in self.bags:
            if b & seen:
                raise GraphError("bags are not pairwise disjoint")
            seen |= b
        if seen != self.graph.full_mask:
            raise GraphError("bags do not cover every vertex")

    def adjacency(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in self.bags]
        for a, b in self.links:
            adj[a].append(b)
            adj[b].append(a)
        return adj

    def _side_mask(self, start: int, banned: int) -> int:
        """Union of bags in the component of ``tree - banned`` containing ``start``."""
        adj = self.adjacency()
        stack, seen, mask = [start], {start, banned}, 0
        while stack:
            x = stack.pop()
            mask |= self.bags[x]
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        return mask

    def to_json(self) -> dict:
        return {
            "tree_links": [list(l) for l in self.links],
            "bags": {str(i): sorted(bits(b)) for i, b in enumerate(self.bags)},
        }


def _size(edges: list[tuple[int, int, int]]) -> int:
    return sum(m for _, _, m in edges)


def link_adhesion(d: TreeCutDecomposition, link: Sequence[int]) -> list[tuple[int, int, int]]:
    """Edge bundles whose endpoints sit on opposite sides of the link."""
    a, b = link
    if (a, b) not in d.links and (b, a) not in d.links:
        raise GraphError(f"unknown link {a}-{b}")
    side = d._side_mask(a, b)
    return d.graph.cut_edges(side)


def node_adhesion(d: TreeCutDecomposition, node: int) -> list[tuple[int, int, int]]:
    """Edge bundles joining different components of ``tree - node`` (empty for leaves)."""
    if not 0 <= node < d.num_nodes:
        raise GraphError(f"unknown node {node}")
    part = {}
    for i, y in enumerate(d.adjacency()[node]):
        for v in bits(d._side_mask(y, node)):
            part[v] = i
    return [(u, v, m) for u, v, m in d.graph.edges()
            if u in part and v in part and part[u] != part[v]]


def width(d: TreeCutDecomposition) -> int:
    d.validate()
    best = 0
    for link in d.links:
        best = max(best, _size(link_adhesion(d, link)))
    for b in range(d.num_nodes):
        best = max(best, _size(node_adhesion(d, b)) + popcount(d.bags[b]))
    return best


# -- exact screewidth ---------------------------------------------------------

SCW_MAX_VERTICES = 9


def _partitions(mask: int) -> Iterator[list[int]]:
    """Set partitions of a vertex mask; each block holds the least remaining vertex."""
    if not mask:
        yield []
        return
    low = mask & -mask
    rest = mask ^ low
    sub = rest
    while True:
        block = low | sub
        for tail in _partitions(mask & ~block):
            yield [block] + tail
        if sub == 0:
            break
        sub = (sub - 1) & rest


def _subsets(mask: int) -> Iterator[int]:
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def screewidth_exact(g: Multigraph) -> tuple[int, TreeCutDecomposition]:
    """Minimum width over all tree-cut decompositions, with an optimal decomposition.

    Root the tree anywhere.  A subtree is described by the vertex set ``S`` of its
    bags; its node keeps a bag ``X`` and splits ``S - X`` among child subtrees.
    Subtrees holding no vertex never lower the width, so every child set is
    nonempty and the recursion over (bag, partition) pairs is exhaustive.
    """
    n = g.n
    if n > SCW_MAX_VERTICES:
        raise SizeLimitError(f"exact screewidth supports at most {SCW_MAX_VERTICES} vertices, got {n}")
    if n == 0:
        raise GraphError("empty graph")
    full = g.full_mask
    internal = [0] * (1 << n)
    for mask in range(1, 1 << n):
        low = mask & -mask
        v = low.bit_length() - 1
        rest = mask ^ low
        internal[mask] = internal[rest] + sum(m for w, m in g.neighbors(v).items() if (rest >> w) & 1)
    degree_sum = [0] * (1 << n)
    for mask in range(1, 1 << n):
        low = mask & -mask
        degree_sum[mask] = degree_sum[mask ^ low] + g.degree(low.bit_length() - 1)

    def cut(mask: int) -> int:
        return degree_sum[mask] - 2 * internal[mask]

    memo: dict[int, tuple[int, int, list[int]]] = {}

    def best_node(s: int) -> tuple[int, int, list[int]]:
        """Best (value, bag, child sets) for a node whose subtree holds ``s``."""
        outside = full & ~s
        best_val = popcount(s)  # a single leaf bag
        best = (best_val, s, [])
        for bag in _subsets(s):
            size = popcount(bag)
            if size >= best[0]:
                continue
            rest = s & ~bag
            if not rest:
                continue
            base = internal[rest | outside] - internal[outside]
            for blocks in _partitions(rest):
                if not bag and len(blocks) == 1:
                    # an empty node of tree-degree <= 2 can be contracted away
                    continue
                val = size + base - sum(internal[b] for b in blocks)
                if val >= best[0]:
                    continue
                for b in blocks:
                    val = max(val, subtree(b))
                    if val >= best[0]:
                        break
                if val < best[0]:
                    best = (val, bag, blocks)
        return best

    def subtree(s: int) -> int:
        if s not in memo:
            memo[s] = best_node(s)
        return max(cut(s), memo[s][0])

    root = best_node(full)
    value = root[0]
    bags: list[int] = []
    links: list[tuple[int, int]] = []

    def emit(choice: tuple[int, int, list[int]]) -> int:
        me = len(bags)
        bags.append(choice[1])
        for b in choice[2]:
            subtree(b)
            child = emit(memo[b])
            links.append((me, child))
        return me

    emit(root)
    d = TreeCutDecomposition.build(g, links, bags)
    return value, d


def screewidth_bruteforce(g: Multigraph, max_nodes: int | None = None) -> int:
    """Minimum width over every labelled tree on up to ``max_nodes`` nodes and every
    assignment of vertices to nodes (tests only; tiny graphs)."""
    import itertools

    n = g.n
    max_nodes = max_nodes or n
    best = n
    for t in range(1, max_nodes + 1):
        for links in _labelled_trees(t):
            for assign in itertools.product(range(t), repeat=n):
                bags = [0] * t
                for v, node in enumerate(assign):
                    bags[node] |= 1 << v
                d = TreeCutDecomposition(g, links, tuple(bags))
                best = min(best, width(d))
    return best


def _labelled_trees(t: int) -> Iterator[tuple[tuple[int, int], ...]]:
    """All labelled trees on t nodes via Pruefer sequences."""
    import itertools

    if t == 1:
        yield ()
        return
    if t == 2:
        yield ((0, 1),)
        return
    for seq in itertools.product(range(t), repeat=t - 2):
        degree = [1] * t
        for x in seq:
            degree[x] += 1
        links = []
        for x in seq:
            leaf = min(i for i in range(t) if degree[i] == 1)
            links.append((leaf, x))
            degree[leaf] -= 1
            degree[x] -= 1
        u, v = [i for i in range(t) if degree[i] == 1]
        links.append((u, v))
        yield tuple(links)


# -- decompositions from the cycle-family constructions -------------------------

def _path_decomposition(g: Multigraph, bags: list[int]) -> TreeCutDecomposition:
    return TreeCutDecomposition.build(g, [(i, i + 1) for i in range(len(bags) - 1)], bags)


def canonical_decomposition(family: str, n: int, k: int, bundle: int) -> tuple[Multigraph, TreeCutDecomposition]:
    """The path decompositions witnessing that one edge deletion lowers sn.

    ``bundle`` is 1-based: bundle ``i`` joins cycle vertices ``i-1`` and ``i mod n``
    (0-based labels).  Returns the graph with one copy of that bundle deleted and
    the decomposition: width 2k-1 for C_{n;k}, at most 2k for C~_{n;k}.
    """
    if not 1 <= bundle <= n:
        raise GraphError(f"bundle must lie in 1..{n}, got {bundle}")
    if family == "C":
        if k < 2 or n < 2 * k:
            raise GraphError("C_{n;k} decompositions need k >= 2 and n >= 2k")
        g = c_nk(n, k)
        a, b = bundle - 1, bundle % n
        h = g.without_edge(a, b)
        # singletons walking around the cycle, starting just after the cut bundle
        order = [(b + j) % n for j in range(n)]
        return h, _path_decomposition(h, [1 << v for v in order])
    if family == "Ctilde":
        if k < 2 or n < 3 * k:
            raise GraphError("C~_{n;k} decompositions need k >= 2 and n >= 3k")
        g = ctilde_nk(n, k)
        a, b = bundle - 1, bundle % n
        h = g.without_edge(a, b)
        if bundle > 2 * k:
            order = [(b + j) % n for j in range(n)]
            return h, _path_decomposition(h, [1 << v for v in order])
        # heavy bundle; reflect so the deleted bundle sits in the second half of the heavy run
        i = bundle
        reflect = i < k + 1
        if reflect:
            i = 2 * k + 1 - i

        def vertex(t: int) -> int:
            # cycle vertex v_t (1-based), mapped through the reflection when needed
            if reflect:
                t = 2 * k + 2 - t
            return (t - 1) % n

        bags = [to_mask(vertex(t) for t in range(1, i + 1)),
                to_mask(vertex(t) for t in range(i + 1, 2 * k + 2))]
        bags += [1 << vertex(t) for t in range(2 * k + 2, n + 1)]
        return h, _path_decomposition(h, bags)
    raise GraphError(f"canonical decompositions exist for families C and Ctilde, not {family!r}")
