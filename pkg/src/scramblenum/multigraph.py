"""Loopless multigraphs on dense vertex labels and their structural queries.

Vertex sets are plain ``int`` bitmasks throughout the package: bit ``v`` is set
when vertex ``v`` is a member.  Parallel edges are stored as a multiplicity per
vertex pair, never expanded.
"""

from __future__ import annotations

import math
from collections import deque
from typing import Iterable, Iterator

from .errors import GraphError, SizeLimitError

INF = math.inf
MAX_VERTICES = 64


def bits(mask: int) -> Iterator[int]:
    """Yield the members of a vertex bitmask in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def popcount(mask: int) -> int:
    return bin(mask).count("1")


class Multigraph:
    """An immutable loopless multigraph on vertices ``0..n-1``.

    ``edges`` may contain ``(u, v)`` pairs or ``(u, v, mult)`` triples; repeated
    pairs accumulate.
    """

    __slots__ = ("n", "_mult", "_nbrs", "_adj", "_deg", "_hash")

    def __init__(self, n: int, edges: Iterable[tuple[int, ...]] = ()):
        if not isinstance(n, int) or n < 0:
            raise GraphError(f"vertex count must be a non-negative int, got {n!r}")
        if n > MAX_VERTICES:
            raise SizeLimitError(f"at most {MAX_VERTICES} vertices supported, got {n}")
        mult: dict[tuple[int, int], int] = {}
        for e in edges:
            if len(e) == 2:
                u, v = e
                m = 1
            elif len(e) == 3:
                u, v, m = e
            else:
                raise GraphError(f"edge must be (u, v) or (u, v, mult), got {e!r}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge {e!r} has an endpoint outside 0..{n - 1}")
            if u == v:
                raise GraphError(f"loop at vertex {u} is not allowed")
            if not isinstance(m, int) or m < 0:
                raise GraphError(f"multiplicity must be a non-negative int, got {m!r}")
            if m == 0:
                continue
            key = (u, v) if u < v else (v, u)
            mult[key] = mult.get(key, 0) + m
        self.n = n
        self._mult = dict(sorted(mult.items()))
        self._nbrs: list[dict[int, int]] = [{} for _ in range(n)]
        for (u, v), m in self._mult.items():
            self._nbrs[u][v] = m
            self._nbrs[v][u] = m
        self._adj = [to_mask(d) for d in self._nbrs]
        self._deg = [sum(d.values()) for d in self._nbrs]
        self._hash = None

    # -- basic accessors -------------------------------------------------

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def edges(self) -> list[tuple[int, int, int]]:
        """Edge bundles as sorted ``(u, v, mult)`` triples with ``u < v``."""
        return [(u, v, m) for (u, v), m in self._mult.items()]

    @property
    def num_edges(self) -> int:
        """Total number of edges counting multiplicity."""
        return sum(self._mult.values())

    def multiplicity(self, u: int, v: int) -> int:
        return self._nbrs[u].get(v, 0)

    def neighbors(self, v: int) -> dict[int, int]:
        """Neighbour -> multiplicity map of ``v`` (do not mutate)."""
        return self._nbrs[v]

    def adjacency_mask(self, v: int) -> int:
        return self._adj[v]

    def degree(self, v: int) -> int:
        """Degree counting parallel edges."""
        return self._deg[v]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Multigraph):
            return NotImplemented
        return self.n == other.n and self._mult == other._mult

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n, tuple(self._mult.items())))
        return self._hash

    def __repr__(self) -> str:
        return f"Multigraph({self.n}, {self.edges()!r})"

    # -- connectivity ----------------------------------------------------

    def reach(self, start: int, within: int | None = None) -> int:
        """Mask of vertices reachable from ``start`` inside ``within``."""
        if within is None:
            within = self.full_mask
        seen = 1 << start
        frontier = seen
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= self._adj[v]
            nxt &= within & ~seen
            seen |= nxt
            frontier = nxt
        return seen

    def is_connected(self, mask: int | None = None) -> bool:
        """Whether the induced subgraph on ``mask`` is connected (empty is not)."""
        if mask is None:
            mask = self.full_mask
        if mask == 0:
            return False
        start = (mask & -mask).bit_length() - 1
        return self.reach(start, mask) == mask

    def components(self, mask: int | None = None) -> list[int]:
        """Connected components of the induced subgraph, ordered by least vertex."""
        if mask is None:
            mask = self.full_mask
        out = []
        rest = mask
        while rest:
            start = (rest & -rest).bit_length() - 1
            comp = self.reach(start, rest)
            out.append(comp)
            rest &= ~comp
        return out

    def is_tree(self) -> bool:
        return self.n >= 1 and self.is_connected() and self.num_edges == self.n - 1

    def cut_size(self, mask: int) -> int:
        """Number of edges (with multiplicity) leaving ``mask``."""
        total = 0
        for v in bits(mask):
            for w, m in self._nbrs[v].items():
                if not (mask >> w) & 1:
                    total += m
        return total

    def internal_edges(self, mask: int) -> int:
        """Number of edges (with multiplicity) with both endpoints in ``mask``."""
        total = 0
        for v in bits(mask):
            for w, m in self._nbrs[v].items():
                if w > v and (mask >> w) & 1:
                    total += m
        return total

    def cut_edges(self, mask: int) -> list[tuple[int, int, int]]:
        """Bundles crossing between ``mask`` and its complement."""
        return [(u, v, m) for (u, v), m in self._mult.items()
                if ((mask >> u) & 1) != ((mask >> v) & 1)]

    # -- derived graphs --------------------------------------------------

    def without_edge(self, u: int, v: int, count: int = 1) -> "Multigraph":
        """Delete ``count`` parallel copies of edge ``uv``."""
        have = self.multiplicity(u, v)
        if count < 1 or have < count:
            raise GraphError(f"cannot delete {count} copies of edge {u}-{v} (multiplicity {have})")
        edges = [(a, b, m - count if {a, b} == {u, v} else m) for a, b, m in self.edges()]
        return Multigraph(self.n, edges)

    def with_edge(self, u: int, v: int, count: int = 1) -> "Multigraph":
        return Multigraph(self.n, self.edges() + [(u, v, count)])

    def induced(self, mask: int) -> tuple["Multigraph", list[int]]:
        """Induced subgraph relabelled densely; also returns new -> old vertex list."""
        keep = list(bits(mask))
        index = {v: i for i, v in enumerate(keep)}
        edges = [(index[u], index[v], m) for u, v, m in self.edges()
                 if u in index and v in index]
        return Multigraph(len(keep), edges), keep

    def without_vertex(self, v: int) -> "Multigraph":
        """Delete ``v`` and its edges; vertices above ``v`` shift down by one."""
        if not 0 <= v < self.n:
            raise GraphError(f"no vertex {v}")
        return self.induced(self.full_mask & ~(1 << v))[0]

    def relabel(self, perm: list[int]) -> "Multigraph":
        """Graph with vertex ``v`` renamed ``perm[v]``."""
        return Multigraph(self.n, [(perm[u], perm[v], m) for u, v, m in self.edges()])

    def underlying_simple(self) -> "Multigraph":
        return Multigraph(self.n, [(u, v, 1) for u, v, _ in self.edges()])


# -- flows and cuts --------------------------------------------------------

def min_cut_between(g: Multigraph, source: int, sink: int, limit: float = INF) -> tuple[int, int]:
    """Minimum number of edges separating two disjoint vertex sets.

    Both sets are contracted to terminals and unit-capacity augmenting paths are
    pushed until none remain or the flow reaches ``limit``.  Returns
    ``(value, side)`` where ``side`` is the source side of a minimum cut (only
    meaningful when the limit was not hit).
    """
    if source & sink:
        raise GraphError("source and sink sets must be disjoint")
    if not source or not sink:
        raise GraphError("source and sink sets must be nonempty")
    n = g.n
    flow = [dict.fromkeys(g.neighbors(v), 0) for v in range(n)]
    value = 0
    while value < limit:
        parent: dict[int, int] = {v: -1 for v in bits(source)}
        queue = deque(parent)
        hit = -1
        while queue and hit < 0:
            v = queue.popleft()
            for w, m in g.neighbors(v).items():
                if w in parent or m - flow[v][w] <= 0:
                    continue
                parent[w] = v
                if (sink >> w) & 1:
                    hit = w
                    break
                queue.append(w)
        if hit < 0:
            side = to_mask(parent)
            return value, side
        w = hit
        while parent[w] != -1:
            v = parent[w]
            flow[v][w] += 1
            flow[w][v] -= 1
            w = v
        value += 1
    return value, 0


def edge_connectivity(g: Multigraph) -> float:
    """Edge connectivity; ``inf`` for graphs with fewer than two vertices."""
    if g.n <= 1:
        return INF
    if not g.is_connected():
        return 0
    best: float = INF
    for v in range(1, g.n):
        value, _ = min_cut_between(g, 1, 1 << v, limit=best)
        best = min(best, value)
    return best


def edge_connectivity_bruteforce(g: Multigraph) -> float:
    """Definition-level edge connectivity over all vertex bipartitions."""
    if g.n <= 1:
        return INF
    best: float = INF
    for mask in range(1, 1 << (g.n - 1)):
        best = min(best, g.cut_size(mask))
    return best


def lambda2(g: Multigraph) -> float:
    """Fewest edges whose deletion leaves exactly two connected parts of size >= 2."""
    if g.n > 24:
        raise SizeLimitError("lambda2 enumerates bipartitions; at most 24 vertices")
    best: float = INF
    full = g.full_mask
    top = 1 << (g.n - 1)
    # vertex n-1 is always on the complement side, so each bipartition is seen once
    for mask in range(1, top):
        rest = full & ~mask
        if popcount(mask) < 2 or popcount(rest) < 2:
            continue
        if g.is_connected(mask) and g.is_connected(rest):
            best = min(best, g.cut_size(mask))
    return best


def independence_number(g: Multigraph) -> int:
    """Exact independence number by branching on a maximum-degree vertex."""
    adj = [g.adjacency_mask(v) for v in range(g.n)]

    def solve(cand: int) -> int:
        if not cand:
            return 0
        pick, deg = -1, -1
        for v in bits(cand):
            d = popcount(adj[v] & cand)
            if d > deg:
                pick, deg = v, d
        if deg == 0:
            return popcount(cand)
        without = solve(cand & ~(1 << pick))
        with_ = 1 + solve(cand & ~(1 << pick) & ~adj[pick])
        return max(without, with_)

    return solve(g.full_mask)


def bridges(g: Multigraph) -> list[tuple[int, int]]:
    """Single edges whose deletion disconnects a connected graph."""
    out = []
    for u, v, m in g.edges():
        if m != 1:
            continue
        side = g.without_edge(u, v).reach(u)
        if not (side >> v) & 1:
            out.append((u, v))
    return out


def connected_subsets(g: Multigraph) -> list[int]:
    """All nonempty connected vertex subsets, ordered by size then bitmask value."""
    if g.n > 20:
        raise SizeLimitError("connected_subsets enumerates 2^n masks; at most 20 vertices")
    found = [m for m in range(1, 1 << g.n) if g.is_connected(m)]
    found.sort(key=lambda m: (popcount(m), m))
    return found
