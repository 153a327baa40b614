"""Property checks over graph collections.

Each checker takes an iterable of connected graphs and returns a list of
violations (plain dicts, JSON-ready); an empty list means the property held.
"""

from __future__ import annotations

from itertools import combinations
from typing import Callable, Iterable

import numpy as np

from .canon import canonical_form, enumerate_connected_multigraphs, multigraphs_on
from .multigraph import (
    INF,
    Multigraph,
    bridges,
    connected_subsets,
    edge_connectivity,
    independence_number,
    lambda2,
    min_cut_between,
    popcount,
)
from .scramble import (
    Scramble,
    egg_cut_bruteforce,
    egg_cut_number,
    order,
    restrict,
    uniform_scramble_2,
)
from .screewidth import screewidth_exact
from .sn_solver import dsn_exact, sn_exact, sn_of_possibly_disconnected, sn_value
from .topo_minor import find_topological_minor, is_multi_topological_minor, smooth, smoothable_vertices

Violation = dict


def _edges(g: Multigraph):
    return g.edges()


def check_edge_connectivity_bound(graphs: Iterable[Multigraph]) -> list[Violation]:
    """sn(G) >= min(lambda(G), |V(G)|)."""
    out = []
    for g in graphs:
        bound = min(edge_connectivity(g), g.n)
        if sn_value(g) < bound:
            out.append({"graph": _edges(g), "n": g.n, "sn": sn_value(g), "bound": bound})
    return out


def check_bridge_split(graphs: Iterable[Multigraph]) -> list[Violation]:
    """sn(G) = max(sn(G1), sn(G2)) across every bridge."""
    out = []
    for g in graphs:
        for u, v in bridges(g):
            rest = g.without_edge(u, v)
            if sn_of_possibly_disconnected(rest) != sn_value(g):
                out.append({"graph": _edges(g), "n": g.n, "bridge": [u, v]})
    return out


def check_subgraph_monotone(graphs: Iterable[Multigraph]) -> list[Violation]:
    """Deleting an edge or vertex never raises sn; smoothing keeps it."""
    out = []
    for g in graphs:
        s = sn_value(g)
        for u, v, _ in g.edges():
            if sn_of_possibly_disconnected(g.without_edge(u, v)) > s:
                out.append({"graph": _edges(g), "n": g.n, "deleted_edge": [u, v]})
        if g.n > 1:
            for v in range(g.n):
                if sn_of_possibly_disconnected(g.without_vertex(v)) > s:
                    out.append({"graph": _edges(g), "n": g.n, "deleted_vertex": v})
        for v in smoothable_vertices(g):
            if sn_value(smooth(g, v)) != s:
                out.append({"graph": _edges(g), "n": g.n, "smoothed": v})
    return out


def check_minor_monotone(graphs: Iterable[Multigraph], multi: bool = False) -> list[Violation]:
    """For every ordered pair with h a (multi-)topological minor of g: sn(h) <= sn(g)."""
    graphs = list(graphs)
    out = []
    for g in graphs:
        for h in graphs:
            if h.n > g.n or h.num_edges > g.num_edges or sn_value(h) <= sn_value(g):
                continue
            contained = (is_multi_topological_minor(h, g) if multi
                         else find_topological_minor(h, g) is not None)
            if contained:
                out.append({"host": _edges(g), "host_n": g.n, "minor": _edges(h), "minor_n": h.n})
    return out


def check_restriction(graphs: Iterable[Multigraph]) -> list[Violation]:
    """Restricting a maximum-order scramble to G - e (e not a bridge) loses at most 1."""
    out = []
    for g in graphs:
        cert = sn_exact(g, use_classifier=False, certify=False)
        s = cert.lower_witness
        before = order(s).order
        if before < 2:
            continue
        cut = set(bridges(g))
        for u, v, _ in g.edges():
            if (u, v) in cut:
                continue
            after = order(restrict(s, g.without_edge(u, v))).order
            if after < before - 1:
                out.append({"graph": _edges(g), "n": g.n, "edge": [u, v],
                            "before": before, "after": after})
    return out


def check_one_edge_deletion(graphs: Iterable[Multigraph]) -> list[Violation]:
    """sn(G) - 1 <= sn(G - e) <= sn(G) for every non-bridge edge."""
    out = []
    for g in graphs:
        s = sn_value(g)
        cut = set(bridges(g))
        for u, v, _ in g.edges():
            if (u, v) in cut:
                continue
            t = sn_value(g.without_edge(u, v))
            if not s - 1 <= t <= s:
                out.append({"graph": _edges(g), "n": g.n, "edge": [u, v], "sn": s, "sn_minus_e": t})
    return out


def check_screewidth_bound(graphs: Iterable[Multigraph]) -> list[Violation]:
    """sn(G) <= scw(G)."""
    out = []
    for g in graphs:
        scw, _ = screewidth_exact(g)
        if sn_value(g) > scw:
            out.append({"graph": _edges(g), "n": g.n, "sn": sn_value(g), "scw": scw})
    return out


def _order_table(g: Multigraph, eggs: list[int]) -> np.ndarray:
    """Order of every family of the given eggs, indexed by family bitmask."""
    m = len(eggs)
    n = g.n
    hits = np.zeros(1 << n, dtype=np.int64)  # egg-family mask hit by each vertex set
    for x in range(1 << n):
        hits[x] = sum(1 << i for i, e in enumerate(eggs) if e & x)
    sizes = np.array([popcount(x) for x in range(1 << n)])
    families = np.arange(1 << m, dtype=np.int64)
    hitting = np.full(1 << m, n, dtype=np.int64)
    for x in np.argsort(sizes, kind="stable")[::-1]:
        covered = (families & ~hits[x]) == 0
        hitting[covered] = np.minimum(hitting[covered], sizes[x])
    egg_cut = np.full(1 << m, np.iinfo(np.int64).max // 2, dtype=np.int64)
    for i, j in combinations(range(m), 2):
        if eggs[i] & eggs[j]:
            continue
        value, _ = min_cut_between(g, eggs[i], eggs[j])
        both = ((families >> i) & 1) & ((families >> j) & 1)
        egg_cut[both == 1] = np.minimum(egg_cut[both == 1], value)
    return np.minimum(hitting, egg_cut)


POOL = 16


def check_superset_redundancy(graphs: Iterable[Multigraph]) -> list[Violation]:
    """Dropping an egg that strictly contains another egg never lowers the order.

    Checked over every family of connected subsets when there are at most
    ``POOL`` of them; otherwise over every family drawn from a pool of ``POOL``
    subsets taken at an even stride through the (size, mask) order.
    """
    out = []
    for g in graphs:
        eggs = sorted(connected_subsets(g), key=lambda e: (popcount(e), e))
        if len(eggs) > POOL:
            eggs = [eggs[i] for i in np.linspace(0, len(eggs) - 1, POOL).round().astype(int)]
        table = _order_table(g, eggs)
        families = np.arange(1, 1 << len(eggs), dtype=np.int64)
        for i, big in enumerate(eggs):
            smaller = [j for j, e in enumerate(eggs) if j != i and e & big == e]
            if not smaller:
                continue
            small_mask = sum(1 << j for j in smaller)
            sel = families[((families >> i) & 1 == 1) & ((families & small_mask) != 0)]
            worse = sel[table[sel & ~(1 << i)] < table[sel]]
            for fam in worse[:3]:
                out.append({"graph": _edges(g), "n": g.n, "family": int(fam), "dropped": i})
    return out


def check_egg_cut_definition(graphs: Iterable[Multigraph]) -> list[Violation]:
    """Pairwise contracted min-cut equals the definitional egg-cut on every two-egg scramble."""
    out = []
    for g in graphs:
        eggs = connected_subsets(g)
        for a, b in combinations(eggs, 2):
            s = Scramble(g, [a, b])
            fast, _ = egg_cut_number(s)
            slow = egg_cut_bruteforce(s)
            if fast != slow:
                out.append({"graph": _edges(g), "n": g.n, "eggs": s.egg_lists(),
                            "flow": fast, "definition": slow})
    return out


def check_uniform2_formula(graphs: Iterable[Multigraph]) -> list[Violation]:
    """order(E_2) = min(lambda_2, |V| - alpha) on graphs with >= 4 vertices."""
    out = []
    for g in graphs:
        if g.n < 4:
            continue
        got = order(uniform_scramble_2(g)).order
        want = min(lambda2(g), g.n - independence_number(g))
        if got != want:
            out.append({"graph": _edges(g), "n": g.n, "order": got, "formula": want})
    return out


def check_dsn_le_sn(graphs: Iterable[Multigraph]) -> list[Violation]:
    """dsn <= sn everywhere, with equality whenever sn <= 3."""
    out = []
    for g in graphs:
        d, s = dsn_exact(g), sn_value(g)
        if d > s or (s <= 3 and d != s):
            out.append({"graph": _edges(g), "n": g.n, "dsn": d, "sn": s})
    return out


def check_menger(graphs: Iterable[Multigraph]) -> list[Violation]:
    """Pairwise max-flow is at least lambda, with equality for some pair."""
    out = []
    for g in graphs:
        if g.n < 2:
            continue
        lam = edge_connectivity(g)
        flows = [min_cut_between(g, 1 << u, 1 << v)[0] for u, v in combinations(range(g.n), 2)]
        if min(flows) != lam:
            out.append({"graph": _edges(g), "n": g.n, "lambda": lam, "min_flow": min(flows)})
    return out


LEMMAS: dict[str, Callable[[Iterable[Multigraph]], list[Violation]]] = {
    "edgeconnect": check_edge_connectivity_bound,
    "bridge": check_bridge_split,
    "subgraph": check_subgraph_monotone,
    "monotone": check_minor_monotone,
    "multi-monotone": lambda gs: check_minor_monotone(gs, multi=True),
    "restrict": check_restriction,
    "one-edge": check_one_edge_deletion,
    "scw-bound": check_screewidth_bound,
    "superset": check_superset_redundancy,
    "eggcut": check_egg_cut_definition,
    "uniform2": check_uniform2_formula,
    "dsn": check_dsn_le_sn,
    "menger": check_menger,
}


def property_universe(max_n: int, max_mult: int) -> list[Multigraph]:
    return list(enumerate_connected_multigraphs(max_n, max_mult))


def sampled_graphs(count: int = 200, n: int = 6, max_mult: int = 2) -> list[Multigraph]:
    """``count`` graphs taken at an even stride through the deterministic
    enumeration of connected n-vertex multigraphs."""
    pool = list(multigraphs_on(n, max_mult))
    stride = max(1, len(pool) // count)
    return pool[::stride][:count]


def verify_lemma(name: str, max_n: int, max_mult: int) -> dict:
    if name not in LEMMAS:
        raise KeyError(f"unknown lemma {name!r}; known: {sorted(LEMMAS)}")
    graphs = property_universe(max_n, max_mult)
    violations = LEMMAS[name](graphs)
    return {"lemma": name, "max_n": max_n, "max_mult": max_mult, "graphs": len(graphs),
            "violations": violations, "passed": not violations}


def distinct_graphs(graphs: Iterable[Multigraph]) -> bool:
    forms = [canonical_form(g) for g in graphs]
    return len(forms) == len(set(forms))


__all__ = ["LEMMAS", "verify_lemma", "sampled_graphs", "property_universe", "distinct_graphs", "INF"]
