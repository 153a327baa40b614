"""Command-line entry point.  Every command prints one JSON object to stdout.

Exit codes: 0 success, 1 negative answer (pattern not found, graph not
minimal), 2 property violation, 64 usage or input error, 65 input beyond the
supported size, 66 timeout.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import signal
import sys
import time
from pathlib import Path

from . import __version__
from .errors import GraphError, SearchLimitError, SizeLimitError
from .families import FAMILIES, family
from .formats import (
    FormatError,
    dumps,
    graph_to_json,
    load_decomposition,
    load_graph,
    load_scramble,
    save_decomposition,
    save_graph,
    save_scramble,
)
from .multigraph import edge_connectivity
from .properties import LEMMAS, verify_lemma
from .reproduce import TARGETS, reproduce
from .scramble import order
from .screewidth import TreeCutDecomposition, canonical_decomposition, screewidth_exact, width
from .sn_solver import (
    SearchProgress,
    classify_sn_le_2,
    dsn_certificate,
    is_k_scramble_minimal,
    sn_exact,
    verify_corollary_3ec,
)
from .topo_minor import find_topological_minor, is_multi_topological_minor, verify_embedding

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_VIOLATION = 2
EXIT_USAGE = 64
EXIT_SIZE = 65
EXIT_TIMEOUT = 66


class UsageError(Exception):
    pass


class Timeout(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise UsageError(f"{self.prog}: {message}")


def _num(x):
    return "inf" if x == float("inf") else x


class Context:
    """Per-run state: input digests and the bounds an interrupted search reached."""

    def __init__(self) -> None:
        self.inputs: dict[str, str] = {}
        self.progress: SearchProgress | None = None

    def digest(self, path: str) -> None:
        try:
            self.inputs[path] = hashlib.sha256(Path(path).read_bytes()).hexdigest()
        except OSError:
            pass

    def graph(self, path: str):
        self.digest(path)
        return load_graph(path)


# -- commands ---------------------------------------------------------------

def cmd_sn(args, ctx: Context):
    g = ctx.graph(args.graph)
    ctx.progress = SearchProgress()
    cert = sn_exact(g, use_classifier=not args.no_classifier, certify=args.certify, progress=ctx.progress)
    out = cert.to_json()
    lower_ok = order(cert.lower_witness).order == cert.value
    upper = cert.upper_witness
    upper_ok = width(upper) == cert.value if isinstance(upper, TreeCutDecomposition) else True
    out["verified"] = lower_ok and upper_ok
    if args.witness_dir:
        folder = Path(args.witness_dir)
        folder.mkdir(parents=True, exist_ok=True)
        save_scramble(cert.lower_witness, folder / "scramble.json")
        out["lower_witness"]["path"] = str(folder / "scramble.json")
        if isinstance(upper, TreeCutDecomposition):
            save_decomposition(upper, folder / "decomposition.json")
            out["upper_witness"]["path"] = str(folder / "decomposition.json")
    return out, EXIT_OK if out["verified"] else EXIT_VIOLATION


def cmd_dsn(args, ctx: Context):
    g = ctx.graph(args.graph)
    value, s = dsn_certificate(g)
    o = order(s)
    return {"dsn": value, "witness": {"eggs": s.egg_lists(), "hitting": o.hitting,
                                       "egg_cut": _num(o.egg_cut), "order": _num(o.order)}}, EXIT_OK


def cmd_classify(args, ctx: Context):
    result = classify_sn_le_2(ctx.graph(args.graph))
    return result.to_json(), EXIT_OK


def cmd_minimal(args, ctx: Context):
    report = is_k_scramble_minimal(ctx.graph(args.graph), args.k)
    return report.to_json(), EXIT_OK if report.minimal else EXIT_NEGATIVE


def cmd_verify(args, ctx: Context):
    if args.what == "corollary-3ec":
        out = verify_corollary_3ec(args.max_n, args.max_mult)
    else:
        if not args.name:
            raise UsageError("verify lemma needs --name")
        out = verify_lemma(args.name, args.max_n, args.max_mult)
    return out, EXIT_OK if out["passed"] else EXIT_VIOLATION


def cmd_topominor(args, ctx: Context):
    h, g = ctx.graph(args.pattern), ctx.graph(args.host)
    if args.multi:
        found = is_multi_topological_minor(h, g)
        return {"relation": "multi-topological-minor", "found": found}, EXIT_OK if found else EXIT_NEGATIVE
    model = find_topological_minor(h, g)
    if model is None:
        return {"relation": "topological-minor", "found": False}, EXIT_NEGATIVE
    return {"relation": "topological-minor", "found": True, "verified": verify_embedding(h, g, model),
            **model.to_json()}, EXIT_OK


def cmd_order(args, ctx: Context):
    ctx.digest(args.scramble)
    s = load_scramble(args.scramble)
    o = order(s)
    return {"h": o.hitting, "e": _num(o.egg_cut), "order": _num(o.order),
            "hitting_set": list(o.hitting_set),
            "egg_cut_edges": [list(e) for e in o.cut_edges(s.host)],
            "eggs": s.egg_lists()}, EXIT_OK


def cmd_scw(args, ctx: Context):
    g = ctx.graph(args.graph)
    value, d = screewidth_exact(g)
    out = {"scw": value, "decomposition": d.to_json()}
    if args.certify:
        out["verified"] = width(d) == value
        if args.out:
            save_decomposition(d, args.out)
            out["path"] = args.out
    return out, EXIT_OK if out.get("verified", True) else EXIT_VIOLATION


def cmd_width(args, ctx: Context):
    g = ctx.graph(args.graph)
    ctx.digest(args.decomp)
    d = load_decomposition(g, args.decomp)
    return {"width": width(d), "nodes": d.num_nodes}, EXIT_OK


def cmd_family(args, ctx: Context):
    params = {"n": args.n, "k": args.k}
    if args.name == "multicycle":
        if not args.mults:
            raise UsageError("family multicycle needs --mults")
        g = family("multicycle", mults=args.mults)
    else:
        g = family(args.name, **params)
    out = {"family": args.name, "graph": graph_to_json(g), "edge_connectivity": _num(edge_connectivity(g))}
    if args.out:
        save_graph(g, args.out)
        out["path"] = args.out
    return out, EXIT_OK


def cmd_lemma_decomp(args, ctx: Context):
    g, d = canonical_decomposition(args.family, args.n, args.k, args.bundle)
    out = {"family": args.family, "n": args.n, "k": args.k, "bundle": args.bundle,
           "graph": graph_to_json(g), "decomposition": d.to_json(), "width": width(d)}
    if args.graph_out:
        save_graph(g, args.graph_out)
    if args.out:
        save_decomposition(d, args.out)
    return out, EXIT_OK


def cmd_reproduce(args, ctx: Context):
    out = reproduce(args.target)
    return out, EXIT_OK if out["passed"] else EXIT_VIOLATION


# -- parser ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="scramblenum", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"scramblenum {__version__}")
    p.add_argument("--threads", type=int, default=None,
                   help="accepted for compatibility; searches run in one thread and results never depend on it")
    p.add_argument("--timeout-secs", type=int, default=None,
                   help="abort after this many seconds (exit 66, partial bounds reported)")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("sn", help="exact scramble number with witnesses")
    s.add_argument("--graph", required=True)
    s.add_argument("--certify", action="store_true", help="use an optimal tree-cut decomposition as upper witness")
    s.add_argument("--no-classifier", action="store_true", help="skip the forbidden-pattern shortcut")
    s.add_argument("--witness-dir", help="write scramble.json and decomposition.json here")
    s.set_defaults(func=cmd_sn)

    s = sub.add_parser("dsn", help="exact disjoint scramble number")
    s.add_argument("--graph", required=True)
    s.set_defaults(func=cmd_dsn)

    s = sub.add_parser("classify", help="decide sn = 1, sn = 2 or sn >= 3")
    s.add_argument("--graph", required=True)
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("minimal", help="check k-scramble-minimality")
    s.add_argument("--graph", required=True)
    s.add_argument("--k", type=int, required=True)
    s.set_defaults(func=cmd_minimal)

    s = sub.add_parser("verify", help="exhaustive property sweeps")
    s.add_argument("what", choices=["corollary-3ec", "lemma"])
    s.add_argument("--name", choices=sorted(LEMMAS))
    s.add_argument("--max-n", type=int, required=True)
    s.add_argument("--max-mult", type=int, required=True)
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("topominor", help="topological-minor containment")
    s.add_argument("--pattern", required=True)
    s.add_argument("--host", required=True)
    s.add_argument("--multi", action="store_true", help="multi-topological minor instead")
    s.set_defaults(func=cmd_topominor)

    s = sub.add_parser("order", help="order of a scramble file")
    s.add_argument("--scramble", required=True)
    s.set_defaults(func=cmd_order)

    s = sub.add_parser("scw", help="exact screewidth")
    s.add_argument("--graph", required=True)
    s.add_argument("--certify", action="store_true")
    s.add_argument("--out", help="with --certify, write the decomposition here")
    s.set_defaults(func=cmd_scw)

    s = sub.add_parser("width", help="validate and evaluate a tree-cut decomposition")
    s.add_argument("--graph", required=True)
    s.add_argument("--decomp", required=True)
    s.set_defaults(func=cmd_width)

    s = sub.add_parser("family", help="build a named graph")
    s.add_argument("name", choices=sorted(FAMILIES) + ["multicycle"])
    s.add_argument("--n", type=int)
    s.add_argument("--k", type=int)
    s.add_argument("--mults", type=int, nargs="+")
    s.add_argument("--out")
    s.set_defaults(func=cmd_family)

    s = sub.add_parser("lemma-decomp", help="path decomposition of a cycle family minus one edge")
    s.add_argument("--family", choices=["C", "Ctilde"], required=True)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--bundle", type=int, default=1)
    s.add_argument("--graph-out")
    s.add_argument("--out")
    s.set_defaults(func=cmd_lemma_decomp)

    s = sub.add_parser("reproduce", help="run a scripted reproduction target")
    s.add_argument("target", choices=sorted(TARGETS))
    s.set_defaults(func=cmd_reproduce)
    return p


def _on_alarm(signum, frame):
    raise Timeout()


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    ctx = Context()
    start = time.perf_counter()

    def emit(payload: dict, code: int) -> int:
        payload["run"] = {"command": argv, "inputs": ctx.inputs, "version": __version__,
                          "seconds": round(time.perf_counter() - start, 3)}
        sys.stdout.write(dumps(payload))
        return code

    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as exc:  # --help / --version
        return int(exc.code or 0)

    if args.timeout_secs is not None:
        if args.timeout_secs <= 0:
            print("--timeout-secs must be positive", file=sys.stderr)
            return EXIT_USAGE
        signal.signal(signal.SIGALRM, _on_alarm)
        signal.alarm(args.timeout_secs)
    try:
        payload, code = args.func(args, ctx)
        return emit(payload, code)
    except Timeout:
        out: dict = {"error": "timeout", "timeout_secs": args.timeout_secs}
        if ctx.progress is not None:
            out["bounds"] = [ctx.progress.lower, ctx.progress.upper]
        return emit(out, EXIT_TIMEOUT)
    except (SizeLimitError, SearchLimitError) as exc:
        return emit({"error": "size-limit", "message": str(exc)}, EXIT_SIZE)
    except (UsageError, FormatError, GraphError, KeyError) as exc:
        return emit({"error": "input", "message": str(exc)}, EXIT_USAGE)
    finally:
        if args.timeout_secs is not None:
            signal.alarm(0)


if __name__ == "__main__":
    sys.exit(main())
