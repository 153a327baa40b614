"""JSON and text-edge-list I/O with canonical, byte-stable serialization."""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from .errors import GraphError
from .multigraph import Multigraph
from .scramble import Scramble
from .screewidth import TreeCutDecomposition


class FormatError(GraphError):
    """Malformed input file."""


def dumps(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ": "), indent=None) + "\n"


# -- graphs ---------------------------------------------------------------

def graph_to_json(g: Multigraph) -> dict:
    return {"n": g.n, "edges": [list(e) for e in g.edges()]}


def graph_from_json(obj: Any) -> Multigraph:
    if not isinstance(obj, dict) or "n" not in obj or "edges" not in obj:
        raise FormatError('graph object needs keys "n" and "edges"')
    n = obj["n"]
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise FormatError('"n" must be a non-negative integer')
    edges = []
    seen = set()
    for e in obj["edges"]:
        if not isinstance(e, list) or len(e) not in (2, 3) or not all(isinstance(x, int) for x in e):
            raise FormatError(f"bad edge entry {e!r}; expected [u, v, mult]")
        u, v = e[0], e[1]
        m = e[2] if len(e) == 3 else 1
        if not (0 <= u < n and 0 <= v < n):
            raise FormatError(f"edge {e!r} names a vertex outside 0..{n - 1}")
        if m < 1:
            raise FormatError(f"edge {e!r} has multiplicity < 1")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise FormatError(f"duplicate pair {list(key)}")
        seen.add(key)
        edges.append((u, v, m))
    try:
        return Multigraph(n, edges)
    except GraphError as exc:
        raise FormatError(str(exc)) from exc


def graph_from_text(text: str) -> Multigraph:
    """Edge list: one ``u v [mult]`` per line, ``#`` comments.

    The vertex count is one more than the largest label unless a line
    ``n N`` fixes it (needed for isolated trailing vertices).
    """
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "n" and len(parts) == 2:
            n = _int(parts[1], lineno)
            continue
        if len(parts) not in (2, 3):
            raise FormatError(f"line {lineno}: expected 'u v mult', got {raw!r}")
        u, v = _int(parts[0], lineno), _int(parts[1], lineno)
        m = _int(parts[2], lineno) if len(parts) == 3 else 1
        edges.append((u, v, m))
    if n is None:
        n = 1 + max((max(u, v) for u, v, _ in edges), default=-1)
    try:
        return Multigraph(n, edges)
    except GraphError as exc:
        raise FormatError(str(exc)) from exc


def _int(token: str, lineno: int) -> int:
    try:
        value = int(token)
    except ValueError:
        raise FormatError(f"line {lineno}: {token!r} is not an integer") from None
    if value < 0:
        raise FormatError(f"line {lineno}: negative value {value}")
    return value


def _read_json(path: Path) -> Any:
    try:
        return json.loads(path.read_text())
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path}: invalid JSON ({exc})") from exc


def load_graph(path: str | Path) -> Multigraph:
    """Read a graph from a JSON object file or a text edge list."""
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise FormatError(f"cannot read {path}: {exc.strerror}") from exc
    if text.lstrip().startswith("{"):
        return graph_from_json(_read_json(path))
    return graph_from_text(text)


def save_graph(g: Multigraph, path: str | Path) -> None:
    Path(path).write_text(dumps(graph_to_json(g)))


# -- scrambles ------------------------------------------------------------

def scramble_to_json(s: Scramble) -> dict:
    return {"graph": graph_to_json(s.host), "eggs": s.egg_lists()}


def scramble_from_json(obj: Any, base: Path | None = None) -> Scramble:
    if not isinstance(obj, dict) or "graph" not in obj or "eggs" not in obj:
        raise FormatError('scramble object needs keys "graph" and "eggs"')
    graph = obj["graph"]
    if isinstance(graph, str):
        p = Path(graph)
        if base is not None and not p.is_absolute():
            p = base / p
        host = load_graph(p)
    else:
        host = graph_from_json(graph)
    eggs = obj["eggs"]
    if not isinstance(eggs, list) or not eggs:
        raise FormatError("a scramble needs at least one egg")
    for egg in eggs:
        if not isinstance(egg, list) or not all(isinstance(v, int) and 0 <= v < host.n for v in egg):
            raise FormatError(f"bad egg {egg!r}")
    try:
        return Scramble(host, eggs)
    except GraphError as exc:
        raise FormatError(str(exc)) from exc


def load_scramble(path: str | Path) -> Scramble:
    path = Path(path)
    if not path.exists():
        raise FormatError(f"cannot read {path}")
    return scramble_from_json(_read_json(path), base=path.parent)


def save_scramble(s: Scramble, path: str | Path) -> None:
    Path(path).write_text(dumps(scramble_to_json(s)))


# -- decompositions ---------------------------------------------------------

def decomposition_from_json(g: Multigraph, obj: Any) -> TreeCutDecomposition:
    if not isinstance(obj, dict) or "tree_links" not in obj or "bags" not in obj:
        raise FormatError('decomposition object needs keys "tree_links" and "bags"')
    bags_obj = obj["bags"]
    if not isinstance(bags_obj, dict):
        raise FormatError('"bags" must map node ids to vertex lists')
    try:
        nodes = sorted(int(k) for k in bags_obj)
    except ValueError:
        raise FormatError("bag keys must be integers") from None
    if nodes != list(range(len(nodes))):
        raise FormatError("bag keys must be 0..t-1")
    bags = [bags_obj[str(i)] for i in nodes]
    for bag in bags:
        if not isinstance(bag, list) or not all(isinstance(v, int) and 0 <= v < g.n for v in bag):
            raise FormatError(f"bad bag {bag!r}")
        if len(set(bag)) != len(bag):
            raise FormatError(f"bag {bag!r} repeats a vertex")
    links = obj["tree_links"]
    if not isinstance(links, list) or not all(isinstance(l, list) and len(l) == 2 for l in links):
        raise FormatError('"tree_links" must be a list of [a, b] pairs')
    # validation errors propagate as GraphError: an invalid near-partition is a hard error
    return TreeCutDecomposition.build(g, links, bags)


def load_decomposition(g: Multigraph, path: str | Path) -> TreeCutDecomposition:
    path = Path(path)
    if not path.exists():
        raise FormatError(f"cannot read {path}")
    return decomposition_from_json(g, _read_json(path))


def save_decomposition(d: TreeCutDecomposition, path: str | Path) -> None:
    Path(path).write_text(dumps(d.to_json()))
