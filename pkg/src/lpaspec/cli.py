"""Command line front end.

Exit codes: 0 success, 1 a ``check`` that does not hold, 2 usage or
parse error, 3 domain error (bad vertex set, size threshold, ...).
"""

from __future__ import annotations

import argparse
import json
import sys

from .constructions import extended_graph, hedge_graph, quotient_graph, restriction_graph
from .errors import DomainError, GraphFormatError, PolyFormatError
from .graph import Graph, Edge, load_graph, serialize_graph, to_dot
from .hsat import closure_stages, enumerate_hsat
from .laurent import make_laurent_prime, parse_field, parse_poly
from .report import build_report, decisions, graph_json, tail_json
from .spectrum import describe_witness
from .tails import enumerate_maximal_tails

EXIT_OK, EXIT_CHECK_FAILED, EXIT_USAGE, EXIT_DOMAIN = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise _UsageError(f"{self.prog}: error: {message}")


class _UsageError(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="text")

    parser = _Parser(prog="lpaspec", description="Structure of Leavitt path algebras of finite graphs.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, help_text):
        p = sub.add_parser(name, help=help_text, parents=[common])
        p.add_argument("file")
        return p

    def field_opts(p):
        p.add_argument("--field", default="q", help="'q' or 'gf:P' (default q)")
        p.add_argument("--max-degree", type=int, default=1)
        p.add_argument("--poly", action="append", default=None,
                       help="instantiate this Laurent prime (repeatable)")
        p.add_argument("--assume-irreducible", action="store_true",
                       help="trust --poly irreducibility over Q above degree 3")

    field_opts(add("analyze", "full JSON/text report"))

    p = sub.add_parser("check", help="decide prime / primitive / simple", parents=[common])
    p.add_argument("property", choices=("prime", "primitive", "simple"))
    p.add_argument("file")

    add("tails", "maximal tails with their gamma/tau kind")
    p = add("closure", "hereditary saturated closure of a vertex set")
    p.add_argument("--set", required=True, dest="vset")
    p = add("hsat", "all hereditary saturated sets")
    p.add_argument("--no-lattice", action="store_true",
                   help="refuse graphs above the brute-force threshold")
    for name in ("quotient", "restrict"):
        p = add(name, f"{name} graph by a hereditary set")
        p.add_argument("--set", required=True, dest="vset")
    p = add("hedge", "the graph _H E")
    p.add_argument("--set", required=True, dest="vset")
    p.add_argument("--bound", type=int, default=8)
    add("extend", "extended graph with ghost edges")
    field_opts(add("spectrum", "prime spectrum"))
    add("dot", "Graphviz export of the graph")
    return parser


def _vertex_set(g: Graph, text: str) -> frozenset[str]:
    names = [s.strip() for s in text.split(",") if s.strip()]
    for v in names:
        g.check_vertex(v)
    return frozenset(names)


def _primes(args, k):
    if not args.poly:
        return None
    return [make_laurent_prime(parse_poly(t, k), k, args.assume_irreducible) for t in args.poly]


def _derived_json(d, **extra) -> dict:
    return {
        "construction": d.construction,
        "params": d.params,
        "graph": graph_json(d.graph),
        "name_map": {k: (list(v) if isinstance(v, tuple) else v) for k, v in d.name_map.items()},
        **extra,
    }


def _graph_from_json(data: dict) -> Graph:
    return Graph(
        tuple(data["vertices"]),
        tuple(Edge(e["name"], e["source"], e["range"]) for e in data["edges"]),
    )


# -- text renderers (input is always the JSON payload) --------------------


def _names(xs) -> str:
    return "{" + ",".join(xs) + "}"


def render_text(command: str, payload: dict) -> str:
    if command == "analyze":
        return _render_report(payload)
    if command == "check":
        return describe_witness(payload["witness"]) if not payload["holds"] else ""
    if command == "tails":
        return "\n".join(_render_tail(t) for t in payload["maximal_tails"])
    if command == "closure":
        lines = [f"closure: {_names(payload['closure'])}"]
        lines += [f"  stage {i}: {_names(s)}" for i, s in enumerate(payload["stages"])]
        return "\n".join(lines)
    if command == "hsat":
        return "\n".join(_names(h) for h in payload["hsat"])
    if command in ("quotient", "restrict", "hedge", "extend"):
        header = [f"derived: {payload['construction']}({payload['params']})"]
        if "finite" in payload:
            header.append(f"finite: {payload['finite']}, truncated: {payload['truncated']}")
        return serialize_graph(_graph_from_json(payload["graph"]), header).rstrip("\n")
    if command == "spectrum":
        return "\n".join(_render_descriptor(d) for d in payload["spectrum"])
    raise ValueError(command)


def _render_tail(t: dict) -> str:
    line = f"{_names(t['members'])} {t['kind']}"
    if t["no_exit_cycle"]:
        line += " cycle (" + " ".join(t["no_exit_cycle"]) + ")"
    return line


def _render_descriptor(d: dict) -> str:
    if d["type"] == "graded":
        return f"graded     H={_names(d['H'])} tail={_names(d['tail'])}"
    return (
        f"nongraded  tail={_names(d['tail'])} P=({d['polynomial']}) "
        f"mu=({' '.join(d['mu'])}) n={d['matrix_size']}"
    )


def _render_report(r: dict) -> str:
    lines = [
        f"vertices: {len(r['graph']['vertices'])}, edges: {len(r['graph']['edges'])}",
        f"field: {r['field']}",
        f"algebra: {r['recognized']['name']}",
        f"condition (L): {r['condition_L']}",
    ]
    for prop in ("prime", "primitive", "simple"):
        line = f"{prop}: {r[prop]}"
        if not r[prop]:
            line += f"  [{describe_witness(r['witnesses'][prop])}]"
        lines.append(line)
    lines.append("maximal tails:")
    lines += ["  " + _render_tail(t) for t in r["maximal_tails"]]
    lines.append(f"prime ideals ({len(r['spectrum'])}):")
    lines += ["  " + _render_descriptor(d) for d in r["spectrum"]]
    return "\n".join(lines)


# -- dispatch ---------------------------------------------------------------


def _execute(args) -> tuple[int, dict]:
    g = load_graph(args.file)
    cmd = args.command
    if cmd == "analyze":
        k = parse_field(args.field)
        return EXIT_OK, build_report(g, k, args.max_degree, _primes(args, k))
    if cmd == "check":
        dec = decisions(g)[args.property]
        payload = {"property": args.property, "holds": dec.holds, "witness": dec.witness}
        return (EXIT_OK if dec.holds else EXIT_CHECK_FAILED), payload
    if cmd == "tails":
        return EXIT_OK, {"maximal_tails": [tail_json(t) for t in enumerate_maximal_tails(g)]}
    if cmd == "closure":
        stages = closure_stages(g, _vertex_set(g, args.vset))
        return EXIT_OK, {
            "set": sorted(_vertex_set(g, args.vset)),
            "closure": sorted(stages[-1]),
            "stages": [sorted(s) for s in stages],
        }
    if cmd == "hsat":
        sets = enumerate_hsat(g, allow_lattice=not args.no_lattice)
        return EXIT_OK, {"hsat": [sorted(h) for h in sets]}
    if cmd == "quotient":
        return EXIT_OK, _derived_json(quotient_graph(g, _vertex_set(g, args.vset)))
    if cmd == "restrict":
        return EXIT_OK, _derived_json(restriction_graph(g, _vertex_set(g, args.vset)))
    if cmd == "extend":
        return EXIT_OK, _derived_json(extended_graph(g))
    if cmd == "hedge":
        res = hedge_graph(g, _vertex_set(g, args.vset), args.bound)
        return EXIT_OK, _derived_json(res.derived, finite=res.finite, truncated=res.truncated)
    if cmd == "spectrum":
        k = parse_field(args.field)
        report = build_report(g, k, args.max_degree, _primes(args, k))
        return EXIT_OK, {
            "field": report["field"],
            "maximal_tails": report["maximal_tails"],
            "spectrum": report["spectrum"],
        }
    raise AssertionError(cmd)


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(exc, file=stderr)
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return int(exc.code or 0)

    if args.command == "dot":
        try:
            stdout.write(to_dot(load_graph(args.file)))
        except (OSError, GraphFormatError) as exc:
            print(f"error: {exc}", file=stderr)
            return EXIT_USAGE
        return EXIT_OK

    try:
        code, payload = _execute(args)
    except (OSError, GraphFormatError, PolyFormatError) as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_USAGE
    except DomainError as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_DOMAIN

    if args.format == "json":
        stdout.write(json.dumps(payload, indent=2) + "\n")
    else:
        text = render_text(args.command, payload)
        if text:
            stdout.write(text + "\n")
    return code


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
