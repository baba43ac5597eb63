"""Command-line front end.

Usage examples::

    lpasr report graph.txt
    lpasr report --family "rose(3)" --json
    lpasr quotient --family chain3 --set v1,v2
    lpasr laurent-check "1+z" "1+z^2"
    lpasr corpus
    lpasr fuzz --count 500 --seed 0

Exit codes: 0 success, 1 corpus mismatch or invariant counterexample,
2 input error, 3 inconclusive (lattice enumeration hit ``--cap``).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence

from . import invariants
from .cycles import InfiniteCSPError, csp_based_at
from .families import CORPUS, CorpusEntry, FamilyError, generate, parse_family
from .graph import Graph, GraphError, parse_graph
from .hereditary import (
    DEFAULT_CAP,
    InfiniteWitness,
    enumerate_hs,
    ideal_graph,
    quotient_graph,
    restriction_graph,
)
from .ktheory import k0_presentation
from .laurent import (
    Irreducible,
    LaurentError,
    Reducible,
    bezout,
    parse_laurent,
    reduction_witness,
    verify_irreducible,
)
from .rank import InconclusiveError, cstar_stable_rank, stable_rank
from .report import SCHEMA, build_report

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_INCONCLUSIVE = 0, 1, 2, 3


class InputError(Exception):
    pass


def _emit(payload: dict, as_json: bool, text: str) -> None:
    if as_json:
        print(json.dumps({"schema": SCHEMA, **payload}, indent=2))
    else:
        print(text)


def _load_graph(args: argparse.Namespace) -> Graph:
    if args.family:
        name, params = parse_family(args.family)
        return generate(name, *params)
    if args.input in (None, "-"):
        text = sys.stdin.read()
    else:
        try:
            text = Path(args.input).read_text(encoding="utf-8")
        except OSError as exc:
            raise InputError(f"cannot read {args.input}: {exc.strerror}") from None
    return parse_graph(text)


def _vertex_set(g: Graph, text: str) -> frozenset[str]:
    return g.check_subset(v.strip() for v in text.split(",") if v.strip())


def _graph_out(g: Graph, as_json: bool) -> None:
    if as_json:
        print(json.dumps({"schema": SCHEMA, "graph": g.to_json()}, indent=2))
    else:
        sys.stdout.write(g.to_dsl())


# ---------------------------------------------------------------------------
# subcommands


def cmd_report(args) -> int:
    report = build_report(_load_graph(args), args.cap)
    _emit(report.to_json(), args.json, report.table())
    return EXIT_OK


def cmd_sr(args) -> int:
    g = _load_graph(args)
    verdict = stable_rank(g, args.cap)
    cstar = cstar_stable_rank(g, args.cap)
    payload = {**verdict.to_json(), "cstar": cstar.value}
    _emit(payload, args.json, f"{verdict.explain()}\nsr(C*(E)) = {cstar.value}")
    return EXIT_OK


def cmd_k0(args) -> int:
    k0 = k0_presentation(_load_graph(args))
    text = (
        f"K0 = {k0.describe()}\n[1] = ({', '.join(map(str, k0.one_class))}); "
        f"torsion order {k0.one_torsion_order}, free gcd {k0.one_free_gcd}"
    )
    _emit(k0.to_json(), args.json, text)
    return EXIT_OK


def cmd_lattice(args) -> int:
    g = _load_graph(args)
    lattice = enumerate_hs(g, args.cap)
    lines = ["{" + ", ".join(g.order(h)) + "}" for h in lattice]
    if lattice.truncated:
        lines.append(f"(truncated at {args.cap})")
    _emit(lattice.to_json(), args.json, "\n".join(lines))
    return EXIT_OK


def cmd_quotient(args) -> int:
    g = _load_graph(args)
    _graph_out(quotient_graph(g, _vertex_set(g, args.set)), args.json)
    return EXIT_OK


def cmd_restrict(args) -> int:
    g = _load_graph(args)
    _graph_out(restriction_graph(g, _vertex_set(g, args.set)), args.json)
    return EXIT_OK


def cmd_ideal_graph(args) -> int:
    g = _load_graph(args)
    result = ideal_graph(g, _vertex_set(g, args.set), require_saturated=not args.hereditary_only)
    if isinstance(result, InfiniteWitness):
        ids = " ".join(e.id for e in result.cycle)
        _emit(result.to_json(), args.json, f"infinitely many entry paths; feeding cycle: {ids}")
    else:
        _graph_out(result, args.json)
    return EXIT_OK


def cmd_csp(args) -> int:
    g = _load_graph(args)
    g.check_vertex(args.vertex)
    try:
        paths = csp_based_at(g, args.vertex, max_length=args.max_length)
        infinite = False
    except InfiniteCSPError as exc:
        # list the finitely many short ones and say so
        detour = " ".join(e.id for e in exc.cycle)
        print(f"infinitely many closed simple paths at {args.vertex}; detour cycle: {detour}",
              file=sys.stderr)
        paths = csp_based_at(g, args.vertex, max_length=len(g.vertices) + 1)
        infinite = True
    payload = {"vertex": args.vertex, "infinite": infinite, "paths": [p.ids() for p in paths]}
    lines = [" ".join(p.ids()) for p in paths]
    if infinite:
        lines.append("... (infinitely many; listing stops at the length bound)")
    _emit(payload, args.json, "\n".join(lines) if lines else "(none)")
    return EXIT_OK


def cmd_laurent_check(args) -> int:
    f, g = parse_laurent(args.f), parse_laurent(args.g)
    pair = bezout(f, g)
    verdict = reduction_witness(f, g, window=args.window)
    payload = {
        "f": str(f),
        "g": str(g),
        "bezout": None if pair is None else {"a": str(pair[0]), "b": str(pair[1])},
        "reduction": verdict.to_json(),
    }
    lines = [f"f = {f}", f"g = {g}"]
    if pair is None:
        lines.append("not comaximal: gcd is not a unit")
    else:
        lines.append(f"comaximal: ({pair[0]})*f + ({pair[1]})*g = 1")
    if isinstance(verdict, Irreducible):
        ok = verify_irreducible(f, g, verdict.proof)
        payload["reduction"]["verified"] = ok
        proof = verdict.proof.to_json()
        lines.append(
            f"irreducible: z^k mod {proof['modulus']} runs through {proof['residues']} "
            f"(period {proof['period']}); none is a scalar multiple of f mod g = {proof['target']}"
        )
        lines.append(f"proof re-verified: {'yes' if ok else 'NO'}")
    elif isinstance(verdict, Reducible):
        lines.append(f"reducible: v = {verdict.v}, f + v*g = {verdict.unit}")
    else:
        lines.append(f"inconclusive: {verdict.reason}")
    _emit(payload, args.json, "\n".join(lines))
    return EXIT_OK


def run_corpus(entries: Sequence[CorpusEntry] = CORPUS) -> list[dict]:
    rows = []
    for entry in entries:
        g = entry.graph()
        computed = {"sr": stable_rank(g).value.value, "cstar": cstar_stable_rank(g).value}
        k0 = k0_presentation(g).to_json()
        for key, want in entry.expected.items():
            if key == "k0":
                got = {k: k0[k] for k in want}
            else:
                got = computed[key]
            rows.append({"graph": entry.name, "field": key, "expected": want, "computed": got,
                         "ok": got == want})
    return rows


def cmd_corpus(args, entries: Sequence[CorpusEntry] = CORPUS) -> int:
    rows = run_corpus(entries)
    passed = all(r["ok"] for r in rows)
    if args.json:
        print(json.dumps({"schema": SCHEMA, "passed": passed, "results": rows}, indent=2))
    else:
        def fmt(x):
            if isinstance(x, dict):
                return ", ".join(f"{k}={v}" for k, v in x.items())
            return str(x)

        for r in rows:
            mark = "ok  " if r["ok"] else "FAIL"
            print(f"{mark} {r['graph']:<9} {r['field']:<6} expected {fmt(r['expected'])}"
                  + ("" if r["ok"] else f"  computed {fmt(r['computed'])}"))
        print(f"{sum(r['ok'] for r in rows)}/{len(rows)} checks passed")
    return EXIT_OK if passed else EXIT_FAIL


def cmd_fuzz(args) -> int:
    if args.max_vertices > 6 or args.max_edges > 10:
        raise InputError("fuzz bounds must stay within 6 vertices and 10 edges (brute-force oracles)")
    checked = 0
    for i, g in enumerate(invariants.random_graphs(args.seed, args.count, args.max_vertices, args.max_edges)):
        failure = invariants.check_graph(g)
        if failure:
            name, msg = failure
            if args.json:
                print(json.dumps({"schema": SCHEMA, "passed": False, "index": i, "invariant": name,
                                  "message": msg, "graph": g.to_dsl()}, indent=2))
            else:
                print(f"counterexample #{i}: {name}: {msg}")
                sys.stdout.write(g.to_dsl())
            return EXIT_FAIL
        checked += 1
    _emit({"passed": True, "count": checked, "seed": args.seed}, args.json,
          f"{checked} graphs, {len(invariants.INVARIANTS)} invariants each: all passed (seed {args.seed})")
    return EXIT_OK


def cmd_generate(args) -> int:
    name, params = parse_family(args.family_name)
    _graph_out(generate(name, *params), args.json)
    return EXIT_OK


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lpasr", description="Stable rank and graph invariants of Leavitt path algebras."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")

    graph_in = argparse.ArgumentParser(add_help=False, parents=[common])
    graph_in.add_argument("input", nargs="?", help="graph file (DSL or JSON); '-' or omitted for stdin")
    graph_in.add_argument("--family", help="use a generated graph instead, e.g. 'rose(3)' or 'enm(2,3)'")
    graph_in.add_argument("--cap", type=int, default=DEFAULT_CAP, help="lattice enumeration cap")

    def add(name, func, help_, parents=(graph_in,)):
        p = sub.add_parser(name, parents=list(parents), help=help_)
        p.set_defaults(func=func)
        return p

    add("report", cmd_report, "full invariant report")
    add("sr", cmd_sr, "stable rank with certificate")
    add("k0", cmd_k0, "K0 group and the class of the identity")
    add("lattice", cmd_lattice, "hereditary saturated subsets")
    for name, func in (("quotient", cmd_quotient), ("restrict", cmd_restrict),
                       ("ideal-graph", cmd_ideal_graph)):
        p = add(name, func, f"{name} graph for a vertex set")
        p.add_argument("--set", required=True, help="comma-separated vertex ids (may be empty)")
        if name == "ideal-graph":
            p.add_argument("--hereditary-only", action="store_true",
                           help="accept a hereditary set that is not saturated")
    p = add("csp", cmd_csp, "closed simple paths based at a vertex")
    p.add_argument("--vertex", required=True)
    p.add_argument("--max-length", type=int, default=None)

    p = add("laurent-check", cmd_laurent_check, "unimodular row (f, g) over Q[z, 1/z]", (common,))
    p.add_argument("f")
    p.add_argument("g")
    p.add_argument("--window", type=int, default=8, help="exponent window when z has infinite order")

    add("corpus", cmd_corpus, "run the built-in example corpus", (common,))

    p = add("fuzz", cmd_fuzz, "check invariants on seeded random graphs", (common,))
    p.add_argument("--count", type=int, default=500)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-vertices", type=int, default=6)
    p.add_argument("--max-edges", type=int, default=10)

    p = add("generate", cmd_generate, "print a family graph", (common,))
    p.add_argument("family_name", metavar="family", help="e.g. line(5), rose(3), enm(2,3), complete(4), chain3")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InconclusiveError as exc:
        print(f"inconclusive: {exc}", file=sys.stderr)
        return EXIT_INCONCLUSIVE
    except (GraphError, FamilyError, LaurentError, InputError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    raise SystemExit(main())
