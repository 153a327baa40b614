"""Scrambles: hitting number, egg-cut number, order and restriction."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .errors import GraphError
from .multigraph import INF, Multigraph, bits, min_cut_between, popcount, to_mask


def _as_mask(egg) -> int:
    if isinstance(egg, int):
        return egg
    return to_mask(egg)


class Scramble:
    """A set of eggs (nonempty connected vertex sets) on a host multigraph.

    Eggs may be given as vertex iterables or bitmasks; duplicates collapse and
    the stored order is by size, then bitmask value.
    """

    __slots__ = ("host", "eggs", "_pair_cuts")

    def __init__(self, host: Multigraph, eggs: Iterable):
        masks = {_as_mask(e) for e in eggs}
        for m in masks:
            if m == 0:
                raise GraphError("eggs must be nonempty")
            if m >> host.n:
                raise GraphError(f"egg {sorted(bits(m))} has vertices outside the host")
            if not host.is_connected(m):
                raise GraphError(f"egg {sorted(bits(m))} is not connected in the host")
        self.host = host
        self.eggs: tuple[int, ...] = tuple(sorted(masks, key=lambda m: (popcount(m), m)))
        self._pair_cuts: dict[tuple[int, int], int] = {}

    def __len__(self) -> int:
        return len(self.eggs)

    def __repr__(self) -> str:
        return f"Scramble({self.egg_lists()!r})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Scramble):
            return NotImplemented
        return self.host == other.host and self.eggs == other.eggs

    def __hash__(self) -> int:
        return hash((self.host, self.eggs))

    def egg_lists(self) -> list[list[int]]:
        return [sorted(bits(m)) for m in self.eggs]

    def pair_cut(self, a: int, b: int) -> int:
        """Minimum edge cut between two disjoint eggs (memoised)."""
        key = (a, b) if a < b else (b, a)
        if key not in self._pair_cuts:
            self._pair_cuts[key], _ = min_cut_between(self.host, a, b)
        return self._pair_cuts[key]


@dataclass(frozen=True)
class ScrambleOrder:
    hitting: int
    egg_cut: float
    hitting_set: tuple[int, ...]
    # source side of a minimum egg-cut, empty when egg_cut is infinite
    cut_side: tuple[int, ...]

    @property
    def order(self) -> float:
        return min(self.hitting, self.egg_cut)

    def cut_edges(self, host: Multigraph) -> list[tuple[int, int, int]]:
        return host.cut_edges(to_mask(self.cut_side)) if self.cut_side else []


def minimum_hitting_set(eggs: Sequence[int]) -> int:
    """Smallest vertex mask meeting every egg mask (branch on the smallest unhit egg)."""
    if not eggs:
        raise GraphError("hitting number of an empty scramble is undefined")
    eggs = sorted(set(eggs), key=lambda m: (popcount(m), m))
    best = [0, len(eggs) + 1]
    # any single vertex from each egg is a valid starting incumbent
    start = 0
    for e in eggs:
        if not e & start:
            start |= e & -e
    best = [start, popcount(start)]

    def packing_bound(rest: list[int]) -> int:
        # greedily packed pairwise-disjoint eggs each need their own vertex
        used = 0
        count = 0
        for e in rest:
            if not e & used:
                used |= e
                count += 1
        return count

    def go(chosen: int, size: int, rest: list[int]) -> None:
        if not rest:
            if size < best[1]:
                best[0], best[1] = chosen, size
            return
        if size + packing_bound(rest) >= best[1]:
            return
        first = rest[0]
        for v in bits(first):
            bit = 1 << v
            go(chosen | bit, size + 1, [e for e in rest if not e & bit])

    go(0, 0, eggs)
    return best[0]


def hitting_number(s: Scramble) -> tuple[int, tuple[int, ...]]:
    """Minimum hitting set size and one optimal hitting set."""
    witness = minimum_hitting_set(s.eggs)
    return popcount(witness), tuple(bits(witness))


def egg_cut_number(s: Scramble) -> tuple[float, tuple[int, ...]]:
    """Minimum egg-cut size (``inf`` if all eggs pairwise meet) and a minimising side."""
    best: float = INF
    side: tuple[int, ...] = ()
    for a, b in combinations(s.eggs, 2):
        if a & b:
            continue
        value = s.pair_cut(a, b)
        if value < best:
            _, mask = min_cut_between(s.host, a, b)
            best, side = value, tuple(bits(mask))
    return best, side


def egg_cut_bruteforce(s: Scramble) -> float:
    """Egg-cut number straight from the definition: bipartitions into two connected
    parts, each containing an egg."""
    g = s.host
    best: float = INF
    full = g.full_mask
    for mask in range(1, 1 << (g.n - 1)):
        rest = full & ~mask
        if not any(e & mask == e for e in s.eggs) or not any(e & rest == e for e in s.eggs):
            continue
        if g.is_connected(mask) and g.is_connected(rest):
            best = min(best, g.cut_size(mask))
    return best


def order(s: Scramble) -> ScrambleOrder:
    h, hit = hitting_number(s)
    e, side = egg_cut_number(s)
    return ScrambleOrder(h, e, hit, side)


def order_value(s: Scramble) -> float:
    return order(s).order


def restrict(s: Scramble, sub: Multigraph, vertex_map: Sequence[int] | None = None) -> Scramble:
    """Restriction of ``s`` to a subgraph.

    ``vertex_map[i]`` names the host vertex that subgraph vertex ``i`` came from
    (identity by default).  Each egg is intersected with the subgraph's vertices
    and kept when the intersection is nonempty and connected in the subgraph.
    """
    host = s.host
    if vertex_map is None:
        if sub.n != host.n:
            raise GraphError("vertex_map is required when the subgraph has fewer vertices")
        vertex_map = list(range(sub.n))
    if len(set(vertex_map)) != len(vertex_map) or any(not 0 <= v < host.n for v in vertex_map):
        raise GraphError("vertex_map must be injective into the host vertices")
    for u, v, m in sub.edges():
        if host.multiplicity(vertex_map[u], vertex_map[v]) < m:
            raise GraphError(f"edge {u}-{v} x{m} of the subgraph is not in the host")
    back = {hv: i for i, hv in enumerate(vertex_map)}
    kept = []
    for egg in s.eggs:
        local = to_mask(back[v] for v in bits(egg) if v in back)
        if local and sub.is_connected(local):
            kept.append(local)
    return Scramble(sub, kept)


def is_disjoint(s: Scramble) -> bool:
    seen = 0
    for e in s.eggs:
        if e & seen:
            return False
        seen |= e
    return True


def uniform_scramble_2(g: Multigraph) -> Scramble:
    """One egg {u, v} per adjacent vertex pair."""
    if g.num_edges == 0:
        raise GraphError("the 2-uniform scramble needs at least one edge")
    return Scramble(g, [(1 << u) | (1 << v) for u, v, _ in g.edges()])


def vertex_scramble(g: Multigraph) -> Scramble:
    """Every vertex as its own egg; its order is min(lambda, |V|)."""
    return Scramble(g, [1 << v for v in range(g.n)])
