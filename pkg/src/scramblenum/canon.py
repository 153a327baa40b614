"""Canonical labelling of multigraphs and isomorph-free enumeration.

The canonical form is computed by colour refinement seeded with weighted
degrees, followed by individualisation/backtracking over the first non-trivial
cell; the lexicographically least relabelled edge list over all leaves wins.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator

import networkx as nx
import numpy as np
from networkx.generators.atlas import graph_atlas_g

from .errors import SizeLimitError
from .multigraph import Multigraph

CanonicalForm = tuple[int, tuple[tuple[int, int, int], ...]]


def _rank(keys: list) -> list[int]:
    order = {k: i for i, k in enumerate(sorted(set(keys)))}
    return [order[k] for k in keys]


def _refine(g: Multigraph, colors: list[int]) -> list[int]:
    while True:
        sigs = [
            (colors[v], tuple(sorted((colors[w], m) for w, m in g.neighbors(v).items())))
            for v in range(g.n)
        ]
        new = _rank(sigs)
        if len(set(new)) == len(set(colors)):
            return new
        colors = new


def canonical_form(g: Multigraph) -> CanonicalForm:
    """An isomorphism-complete invariant: equal iff the graphs are isomorphic."""
    n = g.n
    if n == 0:
        return (0, ())
    start = _refine(g, _rank([(g.degree(v), len(g.neighbors(v))) for v in range(n)]))
    best: list = [None]

    def search(colors: list[int]) -> None:
        cells: dict[int, list[int]] = {}
        for v, c in enumerate(colors):
            cells.setdefault(c, []).append(v)
        target = None
        for c in sorted(cells):
            if len(cells[c]) > 1:
                target = c
                break
        if target is None:
            cert = tuple(sorted(
                (min(colors[u], colors[v]), max(colors[u], colors[v]), m)
                for u, v, m in g.edges()
            ))
            if best[0] is None or cert < best[0]:
                best[0] = cert
            return
        for v in cells[target]:
            split = _rank([(c, 0 if u == v else 1) for u, c in enumerate(colors)])
            search(_refine(g, split))

    search(start)
    return (n, best[0])


def from_canonical(form: CanonicalForm) -> Multigraph:
    n, edges = form
    return Multigraph(n, edges)


def canonical_graph(g: Multigraph) -> Multigraph:
    return from_canonical(canonical_form(g))


def are_isomorphic(g: Multigraph, h: Multigraph) -> bool:
    if g.n != h.n or g.num_edges != h.num_edges:
        return False
    if sorted(g.degree(v) for v in range(g.n)) != sorted(h.degree(v) for v in range(h.n)):
        return False
    return canonical_form(g) == canonical_form(h)


# -- enumeration ------------------------------------------------------------

MAX_ENUM_N = 7
MAX_ENUM_MULT = 4
_CHUNK = 1 << 18


@lru_cache(maxsize=None)
def connected_simple_graphs(n: int) -> tuple[Multigraph, ...]:
    """One representative per isomorphism class of connected simple graphs on n vertices."""
    out = []
    for h in graph_atlas_g():
        if h.number_of_nodes() == n and (n == 1 or nx.is_connected(h)):
            out.append(Multigraph(n, sorted(tuple(sorted(e)) for e in h.edges())))
    return tuple(out)


def _edge_automorphisms(u: Multigraph) -> np.ndarray:
    """Edge permutations induced by the automorphisms of a simple graph."""
    edges = [(a, b) for a, b, _ in u.edges()]
    index = {e: i for i, e in enumerate(edges)}
    h = nx.Graph(edges)
    h.add_nodes_from(range(u.n))
    perms = []
    for iso in nx.algorithms.isomorphism.GraphMatcher(h, h).isomorphisms_iter():
        perm = []
        for a, b in edges:
            x, y = iso[a], iso[b]
            perm.append(index[(x, y) if x < y else (y, x)])
        perms.append(perm)
    return np.array(perms, dtype=np.int64)


def _multiplicity_orbit_reps(u: Multigraph, max_mult: int) -> Iterator[np.ndarray]:
    """Multiplicity vectors over u's edges that are least in their automorphism orbit."""
    m = u.num_edges
    if max_mult == 1 or m == 0:
        yield np.ones((1, m), dtype=np.int64)
        return
    perms = _edge_automorphisms(u)
    base = max_mult
    weights = base ** np.arange(m - 1, -1, -1, dtype=np.int64)
    total = base ** m
    for lo in range(0, total, _CHUNK):
        codes = np.arange(lo, min(total, lo + _CHUNK), dtype=np.int64)
        digits = (codes[:, None] // weights[None, :]) % base
        keep = np.ones(len(codes), dtype=bool)
        for perm in perms:
            # the image of a vector under an edge permutation sends digit i to slot perm[i]
            image = np.empty_like(digits)
            image[:, perm] = digits
            keep &= (image @ weights) >= codes
        if keep.any():
            yield digits[keep] + 1


def multigraphs_on(n: int, max_mult: int) -> Iterator[Multigraph]:
    """Every connected multigraph on exactly n vertices with multiplicities <= max_mult, once per class."""
    if not 1 <= n <= MAX_ENUM_N:
        raise SizeLimitError(f"enumeration supports 1 <= n <= {MAX_ENUM_N}, got {n}")
    if not 1 <= max_mult <= MAX_ENUM_MULT:
        raise SizeLimitError(f"enumeration supports 1 <= max_mult <= {MAX_ENUM_MULT}, got {max_mult}")
    for u in connected_simple_graphs(n):
        pairs = [(a, b) for a, b, _ in u.edges()]
        for block in _multiplicity_orbit_reps(u, max_mult):
            for row in block:
                yield Multigraph(n, [(a, b, int(k)) for (a, b), k in zip(pairs, row)])


def enumerate_connected_multigraphs(max_n: int, max_mult: int, min_n: int = 1) -> Iterator[Multigraph]:
    """Connected multigraphs with min_n..max_n vertices and multiplicities <= max_mult, up to isomorphism."""
    if max_n > MAX_ENUM_N:
        raise SizeLimitError(f"enumeration supports max_n <= {MAX_ENUM_N}, got {max_n}")
    for n in range(max(1, min_n), max_n + 1):
        yield from multigraphs_on(n, max_mult)


def enumerate_naive(n: int, max_mult: int) -> list[Multigraph]:
    """Brute force: every labelled multigraph, deduplicated by canonical form (tests only)."""
    import itertools

    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    seen = {}
    for mults in itertools.product(range(max_mult + 1), repeat=len(pairs)):
        g = Multigraph(n, [(u, v, k) for (u, v), k in zip(pairs, mults)])
        if g.is_connected():
            seen.setdefault(canonical_form(g), g)
    return list(seen.values())
