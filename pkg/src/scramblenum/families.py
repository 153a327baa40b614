"""Named graph families.

Cycles are labelled in cyclic order ``0, 1, ..., n-1``; bundle ``i`` (1-based)
joins vertices ``i-1`` and ``i mod n``.  The wheel puts its hub last.
"""

from __future__ import annotations

from .errors import GraphError
from .multigraph import Multigraph


def _need(ok: bool, message: str) -> None:
    if not ok:
        raise GraphError(message)


def multicycle(mults: list[int]) -> Multigraph:
    """Cycle whose i-th bundle (joining i and i+1 mod n) has ``mults[i]`` copies."""
    n = len(mults)
    _need(n >= 3, "a multicycle needs at least 3 vertices")
    _need(all(isinstance(m, int) and m >= 1 for m in mults), "bundle sizes must be >= 1")
    return Multigraph(n, [(i, (i + 1) % n, m) for i, m in enumerate(mults)])


def multipath(n: int, k: int) -> Multigraph:
    """P_{n;k}: a path on ``n`` vertices with every edge repeated ``k`` times."""
    _need(n >= 2, "P_{n;k} needs n >= 2")
    _need(k >= 1, "P_{n;k} needs k >= 1")
    return Multigraph(n, [(i, i + 1, k) for i in range(n - 1)])


def complete(n: int) -> Multigraph:
    _need(n >= 1, "K_n needs n >= 1")
    return Multigraph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def cycle(n: int) -> Multigraph:
    return multicycle([1] * n)


def path(n: int) -> Multigraph:
    return multipath(n, 1)


def c_nk(n: int, k: int) -> Multigraph:
    """C_{n;k}: an n-cycle with every bundle of size k."""
    _need(n >= 3, "C_{n;k} needs n >= 3")
    _need(k >= 1, "C_{n;k} needs k >= 1")
    return multicycle([k] * n)


def ctilde_nk(n: int, k: int) -> Multigraph:
    """C~_{n;k}: bundles 1..2k have k+1 copies, the remaining n-2k have k."""
    _need(k >= 1, "C~_{n;k} needs k >= 1")
    _need(n >= 2 * k + 1, "C~_{n;k} needs n >= 2k+1")
    return multicycle([k + 1] * (2 * k) + [k] * (n - 2 * k))


def wheel(n: int) -> Multigraph:
    """W_n: an n-cycle on ``0..n-1`` plus hub ``n`` joined to every rim vertex."""
    _need(n >= 3, "W_n needs n >= 3")
    rim = [(i, (i + 1) % n) for i in range(n)]
    return Multigraph(n + 1, rim + [(i, n) for i in range(n)])


def complete_minus_cycle(n: int) -> Multigraph:
    """K_n with the Hamiltonian cycle 0-1-...-(n-1)-0 deleted."""
    _need(n >= 4, "K_n minus a Hamiltonian cycle needs n >= 4")
    return Multigraph(n, [(u, v) for u in range(n) for v in range(u + 1, n)
                          if (v - u) % n not in (1, n - 1)])


def k4() -> Multigraph:
    return complete(4)


def p33() -> Multigraph:
    return multipath(3, 3)


def c3221() -> Multigraph:
    return multicycle([2, 2, 1])


def ll6() -> Multigraph:
    """Loop of loops: a 6-cycle whose bundles alternate 2, 1, 2, 1, 2, 1."""
    return multicycle([2, 1, 2, 1, 2, 1])


FORBIDDEN_SN3 = {"K4": k4, "P33": p33, "C3221": c3221, "LL6": ll6}

FAMILIES = {
    "K4": ((), k4),
    "P33": ((), p33),
    "C3221": ((), c3221),
    "LL6": ((), ll6),
    "W5": ((), lambda: wheel(5)),
    "K": (("n",), complete),
    "path": (("n",), path),
    "cycle": (("n",), cycle),
    "P": (("n", "k"), multipath),
    "C": (("n", "k"), c_nk),
    "Ctilde": (("n", "k"), ctilde_nk),
    "W": (("n",), wheel),
    "KminusC": (("n",), complete_minus_cycle),
}


def family(name: str, **params: int) -> Multigraph:
    """Build a named graph, e.g. ``family("C", n=8, k=3)`` or ``family("LL6")``."""
    if name == "multicycle":
        return multicycle(list(params.get("mults", ())))
    try:
        names, build = FAMILIES[name]
    except KeyError:
        raise GraphError(f"unknown family {name!r}; known: {sorted(FAMILIES)}") from None
    missing = [p for p in names if params.get(p) is None]
    if missing:
        raise GraphError(f"family {name} needs parameters {missing}")
    extra = [p for p, val in params.items() if p not in names and val is not None]
    if extra:
        raise GraphError(f"family {name} does not take parameters {extra}")
    return build(*(params[p] for p in names))
