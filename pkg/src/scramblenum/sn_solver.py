"""Exact scramble number, disjoint scramble number, the sn <= 2 classifier and
scramble-minimality checks.

Deciding ``sn(G) >= k`` uses a reduction of the scramble search.  A scramble has
hitting number at least ``k`` exactly when every vertex set ``X`` of size
``k-1`` misses some egg; that egg lies inside one component of ``G - X``.
Replacing each egg by a component containing it keeps every pair of disjoint
eggs at least as far apart (a cut separating the larger sets also separates
the smaller ones) and keeps the hitting condition.  So ``sn(G) >= k`` iff one
can choose, for every such ``X``, a component of ``G - X`` so that the chosen
sets are pairwise overlapping or separated by at least ``k`` edges.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations

from .errors import GraphError, SizeLimitError
from .families import FORBIDDEN_SN3
from .multigraph import (
    Multigraph,
    bits,
    bridges,
    connected_subsets,
    edge_connectivity,
    min_cut_between,
    popcount,
    to_mask,
)
from .scramble import Scramble, egg_cut_bruteforce, minimum_hitting_set, order, vertex_scramble
from .screewidth import SCW_MAX_VERTICES, TreeCutDecomposition, screewidth_exact, width
from .topo_minor import EmbeddingModel, find_topological_minor, smoothable_vertices

SN_MAX_VERTICES = 10
SN_MAX_MULT = 8


@dataclass(frozen=True)
class ExhaustedSearch:
    """Upper-bound witness: no scramble of order ``bound`` exists."""

    bound: int
    description: str

    def to_json(self) -> dict:
        return {"kind": "exhausted-search", "no_scramble_of_order": self.bound,
                "searched": self.description}


@dataclass(frozen=True)
class ForbiddenMinorFree:
    """Upper-bound witness sn <= 2: none of the four patterns embeds."""

    checked: tuple[str, ...]

    def to_json(self) -> dict:
        return {"kind": "forbidden-minor-free", "patterns": list(self.checked)}


@dataclass(frozen=True)
class SnCertificate:
    value: int
    lower_witness: Scramble
    upper_witness: TreeCutDecomposition | ExhaustedSearch | ForbiddenMinorFree

    def to_json(self) -> dict:
        upper = self.upper_witness
        if isinstance(upper, TreeCutDecomposition):
            upper_json = {"kind": "tree-cut-decomposition", "width": width(upper), **upper.to_json()}
        else:
            upper_json = upper.to_json()
        o = order(self.lower_witness)
        return {
            "sn": self.value,
            "lower_witness": {
                "eggs": self.lower_witness.egg_lists(),
                "hitting": o.hitting,
                "egg_cut": _json_num(o.egg_cut),
                "order": _json_num(o.order),
            },
            "upper_witness": upper_json,
        }


def _json_num(x):
    return "inf" if x == float("inf") else int(x)


@dataclass
class SearchProgress:
    """Bounds known so far; updated in place so an interrupted caller can report them."""

    lower: int = 1
    upper: int | None = None


def _check_input(g: Multigraph, max_n: int = SN_MAX_VERTICES) -> None:
    if g.n == 0 or not g.is_connected():
        raise GraphError("scramble number needs a connected graph")
    if g.n > max_n:
        raise SizeLimitError(f"exact search supports at most {max_n} vertices, got {g.n}")
    if any(m > SN_MAX_MULT for _, _, m in g.edges()):
        raise SizeLimitError(f"exact search supports multiplicities up to {SN_MAX_MULT}")


# -- the decision procedure -----------------------------------------------------

def scramble_at_least(g: Multigraph, k: int) -> Scramble | None:
    """A scramble of order >= k on connected ``g``, or None if sn(g) < k."""
    if k <= 1:
        return Scramble(g, [g.full_mask])
    if k > g.n:
        return None
    full = g.full_mask
    transversals = [to_mask(x) for x in combinations(range(g.n), k - 1)]
    options = {x: g.components(full & ~x) for x in transversals}
    compatible_cache: dict[tuple[int, int], bool] = {}

    def compatible(a: int, b: int) -> bool:
        if a & b:
            return True
        key = (a, b) if a < b else (b, a)
        if key not in compatible_cache:
            value, _ = min_cut_between(g, a, b, limit=k)
            compatible_cache[key] = value >= k
        return compatible_cache[key]

    def solve(chosen: list[int], open_sets: list[int]) -> list[int] | None:
        if not open_sets:
            return chosen
        pick, pick_opts = None, None
        for x in open_sets:
            opts = [c for c in options[x] if all(compatible(c, e) for e in chosen)]
            if not opts:
                return None
            if pick_opts is None or len(opts) < len(pick_opts):
                pick, pick_opts = x, opts
                if len(opts) == 1:
                    break
        # larger components first: they are compatible with more
        for c in sorted(pick_opts, key=lambda m: (-popcount(m), m)):
            # a set X is settled once some chosen egg avoids it
            rest = [x for x in open_sets if c & x]
            found = solve(chosen + [c], rest)
            if found is not None:
                return found
        return None

    found = solve([], transversals)
    return None if found is None else Scramble(g, found)


def _search_description(g: Multigraph, k: int) -> str:
    return (f"every choice of one component of G-X for each of the "
            f"{len(list(combinations(range(g.n), k - 1)))} vertex sets X of size {k - 1} "
            f"has two disjoint choices separated by fewer than {k} edges")


# -- classifier -----------------------------------------------------------------

@dataclass(frozen=True)
class ClassificationResult:
    verdict: str  # "sn=1", "sn=2" or "sn>=3"
    pattern: str | None = None
    embedding: EmbeddingModel | None = None
    checked: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        out = {"verdict": self.verdict, "checked": self.checked}
        if self.pattern is not None:
            out["pattern"] = self.pattern
            out["embedding"] = self.embedding.to_json()
        return out


def classify_sn_le_2(g: Multigraph) -> ClassificationResult:
    """sn = 1 for trees; otherwise sn >= 3 iff one of K4, P33, C3221, LL6 embeds."""
    if g.n == 0 or not g.is_connected():
        raise GraphError("classification needs a connected graph")
    if g.is_tree():
        return ClassificationResult("sn=1")
    checked = {}
    for name, build in FORBIDDEN_SN3.items():
        model = find_topological_minor(build(), g)
        checked[name] = model is not None
        if model is not None:
            return ClassificationResult("sn>=3", name, model, checked)
    return ClassificationResult("sn=2", checked=checked)


# -- exact scramble number --------------------------------------------------------

def _two_vertex_cycle_scramble(g: Multigraph) -> Scramble:
    """Two distinct vertices of a cycle; order 2 on any bridgeless graph with >= 2 vertices."""
    u, v, _ = g.edges()[0]
    return Scramble(g, [1 << u, 1 << v])


def _bridgeless_sn(g: Multigraph, use_classifier: bool, certify: bool,
                   progress: SearchProgress) -> SnCertificate:
    lower_scramble = vertex_scramble(g)
    lower = int(min(edge_connectivity(g), g.n))
    if g.n == 1:
        return SnCertificate(1, Scramble(g, [1]), TreeCutDecomposition.build(g, [], [1]))
    progress.lower = max(progress.lower, lower)
    # one bag holding every vertex has width |V|
    upper_witness = TreeCutDecomposition.build(g, [], [g.full_mask])
    upper = g.n
    if certify and g.n <= SCW_MAX_VERTICES:
        upper, upper_witness = screewidth_exact(g)
    progress.upper = upper
    if lower >= upper:
        return SnCertificate(lower, lower_scramble, upper_witness)
    if use_classifier and lower <= 2 < upper:
        verdict = classify_sn_le_2(g)
        if verdict.verdict == "sn=2":
            witness = upper_witness if upper == 2 else ForbiddenMinorFree(tuple(FORBIDDEN_SN3))
            return SnCertificate(2, _two_vertex_cycle_scramble(g) if lower < 2 else lower_scramble,
                                 witness)
    best = lower_scramble
    k = lower + 1
    while k <= upper:
        found = scramble_at_least(g, k)
        if found is None:
            return SnCertificate(k - 1, best, ExhaustedSearch(k, _search_description(g, k)))
        best = found
        k = int(order(found).order) + 1
        progress.lower = k - 1
    return SnCertificate(upper, best, upper_witness)


def _lift(s: Scramble, host: Multigraph, keep: list[int]) -> Scramble:
    return Scramble(host, [to_mask(keep[v] for v in bits(e)) for e in s.eggs])


def _join_decompositions(g: Multigraph, parts: list[tuple[list[int], TreeCutDecomposition]],
                         bridge_list: list[tuple[int, int]]) -> TreeCutDecomposition:
    """Glue per-block decompositions with one link per bridge."""
    bags: list[int] = []
    links: list[tuple[int, int]] = []
    node_of: dict[int, int] = {}
    for keep, d in parts:
        offset = len(bags)
        for i, b in enumerate(d.bags):
            mask = to_mask(keep[v] for v in bits(b))
            bags.append(mask)
            for v in bits(mask):
                node_of[v] = offset + i
        links.extend((a + offset, b + offset) for a, b in d.links)
    links.extend((node_of[u], node_of[v]) for u, v in bridge_list)
    return TreeCutDecomposition.build(g, links, bags)


def sn_exact(g: Multigraph, use_classifier: bool = True, certify: bool = True,
             progress: SearchProgress | None = None) -> SnCertificate:
    """Exact scramble number with a lower and an upper witness.

    Trees give 1; bridges split the graph into blocks whose maximum is taken;
    each block runs bounds (min(lambda, |V|) below, screewidth above), the
    optional classifier, then the exhaustive decision procedure.
    """
    _check_input(g)
    progress = progress or SearchProgress()
    if progress.upper is None:
        progress.upper = g.n  # a hitting set never needs more than every vertex
    if g.is_tree():
        d = TreeCutDecomposition.build(g, [(u, v) for u, v, _ in g.edges()], [1 << v for v in range(g.n)])
        return SnCertificate(1, Scramble(g, [1]), d)
    cut = bridges(g)
    if not cut:
        return _bridgeless_sn(g, use_classifier, certify, progress)
    rest = g
    for u, v in cut:
        rest = rest.without_edge(u, v)
    parts = []
    for comp in rest.components():
        sub, keep = rest.induced(comp)
        block = _bridgeless_sn(sub, use_classifier, certify, SearchProgress(upper=sub.n))
        parts.append((keep, block))
        progress.lower = max(progress.lower, block.value)
    keep, best = max(parts, key=lambda p: p[1].value)
    value = best.value
    lower = _lift(best.lower_witness, g, keep)
    uppers = [c.upper_witness for _, c in parts]
    if all(isinstance(u, TreeCutDecomposition) for u in uppers):
        upper = _join_decompositions(g, [(k, c.upper_witness) for k, c in parts], cut)
    else:
        upper = ExhaustedSearch(value + 1, "blocks between bridges: " + "; ".join(
            f"block {sorted(k)} has sn {c.value}" for k, c in parts))
    return SnCertificate(value, lower, upper)


@lru_cache(maxsize=200_000)
def sn_value(g: Multigraph) -> int:
    """Scramble number alone (no screewidth witness, no classifier)."""
    return sn_exact(g, use_classifier=False, certify=False).value


def sn_of_possibly_disconnected(g: Multigraph) -> int:
    """Maximum over components; used after deleting an edge that may be a bridge."""
    return max(sn_value(g.induced(c)[0]) for c in g.components())


# -- brute-force oracle --------------------------------------------------------------

def sn_bruteforce(g: Multigraph) -> int:
    """Maximum order over every antichain of connected subsets (tests only, <= 5 vertices).

    Uses the definitional egg-cut and a brute-force hitting number, so it shares
    nothing with :func:`scramble_at_least` beyond the graph type.
    """
    if g.n > 5:
        raise SizeLimitError("the antichain oracle supports at most 5 vertices")
    eggs = connected_subsets(g)
    best = 0

    def hit(family: list[int]) -> int:
        for size in range(1, g.n + 1):
            for xs in combinations(range(g.n), size):
                x = to_mask(xs)
                if all(e & x for e in family):
                    return size
        return g.n

    def go(i: int, family: list[int]) -> None:
        nonlocal best
        if family:
            h = hit(family)
            if h > best:
                e = egg_cut_bruteforce(Scramble(g, family))
                best = max(best, min(h, e))
        for j in range(i, len(eggs)):
            cand = eggs[j]
            if any(f & cand == f or f & cand == cand for f in family):
                continue
            go(j + 1, family + [cand])

    go(0, [])
    return int(best)


# -- disjoint scramble number -------------------------------------------------------

def disjoint_scramble_at_least(g: Multigraph, k: int) -> Scramble | None:
    """k pairwise-disjoint connected sets, pairwise separated by >= k edges, or None."""
    if k <= 1:
        return Scramble(g, [g.full_mask])
    if k > g.n:
        return None
    eggs = connected_subsets(g)
    by_low: dict[int, list[int]] = {}
    for e in eggs:
        by_low.setdefault((e & -e).bit_length() - 1, []).append(e)
    cache: dict[tuple[int, int], bool] = {}

    def far(a: int, b: int) -> bool:
        key = (a, b) if a < b else (b, a)
        if key not in cache:
            cache[key] = min_cut_between(g, a, b, limit=k)[0] >= k
        return cache[key]

    def go(chosen: list[int], used: int, start: int) -> list[int] | None:
        if len(chosen) == k:
            return chosen
        free = g.full_mask & ~used
        if popcount(free >> start) < k - len(chosen):
            return None
        for low in range(start, g.n):
            if (used >> low) & 1:
                continue
            for e in by_low.get(low, ()):
                if e & used:
                    continue
                if all(far(e, c) for c in chosen):
                    found = go(chosen + [e], used | e, low + 1)
                    if found is not None:
                        return found
        return None

    found = go([], 0, 0)
    return None if found is None else Scramble(g, found)


def dsn_exact(g: Multigraph) -> int:
    """Largest order of a scramble whose eggs are pairwise disjoint."""
    return dsn_certificate(g)[0]


def dsn_certificate(g: Multigraph) -> tuple[int, Scramble]:
    _check_input(g, max_n=8)
    upper = sn_value(g)
    best = Scramble(g, [g.full_mask])
    value = 1
    for k in range(2, upper + 1):
        found = disjoint_scramble_at_least(g, k)
        if found is None:
            break
        best, value = found, k
    return value, best


# -- scramble minimality ---------------------------------------------------------------

@dataclass
class MinimalityReport:
    k: int
    sn: int
    minimal: bool
    reason: str
    deletions: list = field(default_factory=list)  # (u, v, sn after deleting one copy)

    def __bool__(self) -> bool:
        return self.minimal

    def to_json(self) -> dict:
        return {"k": self.k, "sn": self.sn, "minimal": self.minimal, "reason": self.reason,
                "deletions": [{"edge": [u, v], "sn": s} for u, v, s in self.deletions]}


def is_k_scramble_minimal(g: Multigraph, k: int) -> MinimalityReport:
    """sn(g) >= k and every proper topological minor has sn < k.

    Smoothing keeps sn and every proper subgraph lies inside some ``g - e``, so it
    suffices to require no smoothable vertex and sn(g - e) < k for every edge.
    """
    _check_input(g)
    sn = sn_value(g)
    if sn < k:
        return MinimalityReport(k, sn, False, f"sn = {sn} < {k}")
    smooth = smoothable_vertices(g)
    if smooth:
        return MinimalityReport(k, sn, False, f"vertex {smooth[0]} can be smoothed")
    deletions = []
    for u, v, _ in g.edges():
        value = sn_of_possibly_disconnected(g.without_edge(u, v))
        deletions.append((u, v, value))
        if value >= k:
            return MinimalityReport(k, sn, False, f"deleting edge {u}-{v} leaves sn = {value}", deletions)
    return MinimalityReport(k, sn, True, "every single-edge deletion drops sn below k", deletions)


# -- 3-edge-connected sweep -------------------------------------------------------------

def verify_corollary_3ec(max_n: int, max_mult: int, min_n: int = 3) -> dict:
    """Check that every 3-edge-connected multigraph in range contains K4, P33 or C3221."""
    from .canon import enumerate_connected_multigraphs

    if max_n > 6 or max_mult > 4:
        raise SizeLimitError("the sweep supports max_n <= 6 and max_mult <= 4")
    patterns = {name: FORBIDDEN_SN3[name]() for name in ("K4", "P33", "C3221")}
    tested = skipped = 0
    hits = dict.fromkeys(patterns, 0)
    counterexamples = []
    for g in enumerate_connected_multigraphs(max_n, max_mult, min_n=max(3, min_n)):
        if edge_connectivity(g) < 3:
            skipped += 1
            continue
        tested += 1
        for name, h in patterns.items():
            if find_topological_minor(h, g) is not None:
                hits[name] += 1
                break
        else:
            counterexamples.append(g.edges())
    return {"max_n": max_n, "max_mult": max_mult, "tested": tested, "skipped": skipped,
            "first_pattern_found": hits, "counterexamples": counterexamples,
            "passed": not counterexamples}
