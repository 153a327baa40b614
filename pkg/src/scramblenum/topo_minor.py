"""Smoothing, multi-smoothing and topological-minor containment.

A pattern ``h`` is a topological minor of ``g`` exactly when some subdivision of
``h`` is a subgraph of ``g``.  The search assigns branch vertices (distinct
vertices of ``g``) and then routes one path per pattern edge, parallel pattern
edges included, with all paths internally disjoint and avoiding branch images.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .canon import canonical_form
from .errors import GraphError, SearchLimitError, SizeLimitError
from .multigraph import Multigraph


def _two_neighbours(g: Multigraph, v: int) -> tuple[int, int, int, int]:
    nbrs = g.neighbors(v)
    if len(nbrs) != 2:
        raise GraphError(f"vertex {v} has {len(nbrs)} distinct neighbours, need exactly 2")
    (a, ma), (b, mb) = sorted(nbrs.items())
    return a, ma, b, mb


def _drop_and_join(g: Multigraph, v: int, a: int, b: int, count: int) -> Multigraph:
    joined = g.with_edge(a, b, count)
    return joined.without_vertex(v)


def smooth(g: Multigraph, v: int) -> Multigraph:
    """Replace a degree-2 vertex with two distinct neighbours by a single edge.

    Vertices above ``v`` shift down by one.
    """
    if g.degree(v) != 2:
        raise GraphError(f"vertex {v} has degree {g.degree(v)}, smoothing needs degree 2")
    a, _, b, _ = _two_neighbours(g, v)
    return _drop_and_join(g, v, a, b, 1)


def multi_smooth(g: Multigraph, u: int) -> Multigraph:
    """Remove ``u`` (joined to v by m edges and w by n edges) and add min(m, n) v-w edges."""
    a, ma, b, mb = _two_neighbours(g, u)
    return _drop_and_join(g, u, a, b, min(ma, mb))


def smoothable_vertices(g: Multigraph) -> list[int]:
    return [v for v in range(g.n) if g.degree(v) == 2 and len(g.neighbors(v)) == 2]


@dataclass(frozen=True)
class EmbeddingModel:
    """Witness that a pattern is a topological minor of a host.

    ``branch_map[a]`` is the host image of pattern vertex ``a``; ``paths`` holds
    one host vertex sequence per pattern edge copy, listed in the order of the
    pattern's edges (copy by copy).
    """

    branch_map: tuple[int, ...]
    paths: tuple[tuple[int, ...], ...]
    pattern_edges: tuple[tuple[int, int], ...] = field(default=())

    def to_json(self) -> dict:
        return {
            "branch_map": {str(a): v for a, v in enumerate(self.branch_map)},
            "path_map": [
                {"edge": list(e), "path": list(p)} for e, p in zip(self.pattern_edges, self.paths)
            ],
        }


def _edge_copies(h: Multigraph) -> list[tuple[int, int]]:
    return [(u, v) for u, v, m in h.edges() for _ in range(m)]


def verify_embedding(h: Multigraph, g: Multigraph, model: EmbeddingModel) -> bool:
    """Independent check of every witness invariant."""
    phi = model.branch_map
    if len(phi) != h.n or len(set(phi)) != h.n or not all(0 <= x < g.n for x in phi):
        return False
    copies = _edge_copies(h)
    if len(model.paths) != len(copies):
        return False
    branch = set(phi)
    used_internal: set[int] = set()
    used_edges: dict[tuple[int, int], int] = {}
    for (a, b), p in zip(copies, model.paths):
        if len(p) < 2 or {p[0], p[-1]} != {phi[a], phi[b]}:
            return False
        inner = p[1:-1]
        if len(set(p)) != len(p):
            return False
        for x in inner:
            if x in branch or x in used_internal:
                return False
            used_internal.add(x)
        for x, y in zip(p, p[1:]):
            key = (x, y) if x < y else (y, x)
            used_edges[key] = used_edges.get(key, 0) + 1
            if used_edges[key] > g.multiplicity(x, y):
                return False
    return True


def _degree_dominated(h: Multigraph, g: Multigraph) -> bool:
    hd = sorted((h.degree(v) for v in range(h.n)), reverse=True)
    gd = sorted((g.degree(v) for v in range(g.n)), reverse=True)
    return all(x <= y for x, y in zip(hd, gd))


def find_topological_minor(h: Multigraph, g: Multigraph) -> EmbeddingModel | None:
    """Search for an embedding of a subdivision of ``h`` into ``g``."""
    if h.n > g.n or h.num_edges > g.num_edges or not _degree_dominated(h, g):
        return None
    if h.n == 0:
        return EmbeddingModel((), ())
    order = sorted(range(h.n), key=lambda a: (-h.degree(a), a))
    candidates = sorted(range(g.n), key=lambda x: (-g.degree(x), x))
    copies = _edge_copies(h)
    # route edges between high-degree pattern vertices first
    rank = {a: i for i, a in enumerate(order)}
    route_order = sorted(range(len(copies)), key=lambda i: (max(rank[copies[i][0]], rank[copies[i][1]]), i))
    phi = [-1] * h.n
    taken: set[int] = set()

    def assign(i: int):
        if i == len(order):
            return route()
        a = order[i]
        for x in candidates:
            if x in taken or g.degree(x) < h.degree(a):
                continue
            phi[a] = x
            taken.add(x)
            found = assign(i + 1)
            taken.discard(x)
            if found is not None:
                return found
        phi[a] = -1
        return None

    def route():
        branch = set(phi)
        blocked = set(branch)
        used: dict[tuple[int, int], int] = {}
        paths: list[tuple[int, ...] | None] = [None] * len(copies)

        def paths_between(s: int, t: int):
            # simple paths, shortest first, through unblocked vertices
            stack_paths = deque([(s,)])
            out = []
            while stack_paths:
                p = stack_paths.popleft()
                last = p[-1]
                for w in g.neighbors(last):
                    if w == t:
                        out.append(p + (t,))
                    elif w not in blocked and w not in p:
                        stack_paths.append(p + (w,))
            return out

        def step(j: int) -> bool:
            if j == len(route_order):
                return True
            idx = route_order[j]
            a, b = copies[idx]
            s, t = phi[a], phi[b]
            for p in paths_between(s, t):
                inner = p[1:-1]
                if any(x in blocked for x in inner):
                    continue
                keys = [((x, y) if x < y else (y, x)) for x, y in zip(p, p[1:])]
                if any(used.get(k, 0) >= g.multiplicity(*k) for k in keys):
                    continue
                for k in keys:
                    used[k] = used.get(k, 0) + 1
                blocked.update(inner)
                paths[idx] = p
                if step(j + 1):
                    return True
                blocked.difference_update(inner)
                for k in keys:
                    used[k] -= 1
            return False

        if step(0):
            return EmbeddingModel(tuple(phi), tuple(paths), tuple(copies))
        return None

    return assign(0)


def is_topological_minor(h: Multigraph, g: Multigraph) -> EmbeddingModel | None:
    """Alias of :func:`find_topological_minor`; an embedding is truthy."""
    return find_topological_minor(h, g)


# -- multi-topological minors -------------------------------------------------

MULTI_MINOR_MAX_VERTICES = 9


def _connected_pieces(g: Multigraph, min_n: int) -> list[Multigraph]:
    if g.is_connected():
        return [g] if g.n >= min_n else []
    out = []
    for comp in g.components():
        sub, _ = g.induced(comp)
        if sub.n >= min_n:
            out.append(sub)
    return out


def _multi_minor_moves(g: Multigraph, min_n: int, min_e: int) -> list[Multigraph]:
    out = []
    if g.num_edges > min_e:
        for u, v, _ in g.edges():
            out.extend(_connected_pieces(g.without_edge(u, v), min_n))
    if g.n > min_n:
        for v in range(g.n):
            out.extend(_connected_pieces(g.without_vertex(v), min_n))
            if len(g.neighbors(v)) == 2:
                out.extend(_connected_pieces(multi_smooth(g, v), min_n))
    # edge totals never grow under these moves
    return [x for x in out if x.num_edges >= min_e]


def multi_minor_closure(g: Multigraph, min_n: int = 1, max_states: int = 10**6) -> set:
    """Canonical forms of every connected multi-topological minor of g with >= min_n vertices."""
    start = canonical_form(g)
    seen = {start}
    queue = deque([g])
    while queue:
        cur = queue.popleft()
        for nxt in _multi_minor_moves(cur, min_n, 0):
            form = canonical_form(nxt)
            if form not in seen:
                seen.add(form)
                if len(seen) > max_states:
                    raise SearchLimitError(f"multi-minor closure exceeded {max_states} states")
                queue.append(nxt)
    return seen


def is_multi_topological_minor(h: Multigraph, g: Multigraph, max_states: int = 10**6) -> bool:
    """Whether h arises from g by deleting vertices/edges and multi-smoothing."""
    if g.n > MULTI_MINOR_MAX_VERTICES:
        raise SizeLimitError(f"multi-minor closure supports at most {MULTI_MINOR_MAX_VERTICES} vertices")
    target = canonical_form(h)
    start = canonical_form(g)
    if start == target:
        return True
    if h.n > g.n:
        return False
    seen = {start}
    queue = deque([g])
    while queue:
        cur = queue.popleft()
        for nxt in _multi_minor_moves(cur, h.n, h.num_edges):
            form = canonical_form(nxt)
            if form == target:
                return True
            if form in seen:
                continue
            seen.add(form)
            if len(seen) > max_states:
                raise SearchLimitError(f"multi-minor closure exceeded {max_states} states")
            queue.append(nxt)
    return False
