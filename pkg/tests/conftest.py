from __future__ import annotations

import networkx as nx
from hypothesis import strategies as st

from scramblenum.multigraph import Multigraph


@st.composite
def multigraphs(draw, min_n: int = 1, max_n: int = 6, max_mult: int = 3, connected: bool = True):
    """Random multigraphs; connected ones grow from a random spanning tree."""
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    mult = dict.fromkeys(pairs, 0)
    if connected:
        for v in range(1, n):
            parent = draw(st.integers(0, v - 1))
            mult[(parent, v)] = draw(st.integers(1, max_mult))
    for p in pairs:
        if draw(st.booleans()):
            mult[p] = max(mult[p], draw(st.integers(1, max_mult)))
    return Multigraph(n, [(u, v, m) for (u, v), m in mult.items() if m])


def to_networkx(g: Multigraph) -> nx.MultiGraph:
    h = nx.MultiGraph()
    h.add_nodes_from(range(g.n))
    for u, v, m in g.edges():
        h.add_edges_from([(u, v)] * m)
    return h


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
