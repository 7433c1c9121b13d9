"""Command-line front end: classify | factor | graph | props | verify.

Exit codes: 0 success, 1 a checked theorem failed, 2 usage error (bad
arguments, ring specs or element literals), 3 domain error (a unit where a
non-unit is required).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .associates import Assoc
from .atoms import Atom, classify, profiles
from .common import UnitElementError, fmt_ext
from .factorization import enumerate_factorizations
from .graphs import build_divisor_graph, degl, degree, graph_metrics, to_dict, to_dot
from .harness import (DEFAULT_CORPUS, SuiteConfig, default_corpus_path, load_corpus, render_json,
                      render_text, run_suite, suite_passed)
from .props import property_report, render_report, scope_notes
from .rings import RingError, build_ring

EXIT_OK, EXIT_THEOREM, EXIT_USAGE, EXIT_DOMAIN = 0, 1, 2, 3

ALPHA_TOKENS = [a.value for a in Atom]
BETA_TOKENS = [b.value for b in Assoc]


class UsageError(Exception):
    pass


def _atom(token: str) -> Atom:
    try:
        return Atom.parse(token)
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"{e}; choose from {', '.join(ALPHA_TOKENS)}") from None


def _assoc(token: str) -> Assoc:
    try:
        return Assoc.parse(token)
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"{e}; choose from {', '.join(BETA_TOKENS)}") from None


def _positive(token: str) -> int:
    n = int(token)
    if n < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return n


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="divgraph", description="Irreducible divisor graphs of finite commutative rings.")
    sub = p.add_subparsers(dest="command", required=True)

    def ring_args(sp, needs_x=False):
        sp.add_argument("--ring", required=True, help='ring spec, e.g. "Prod(Zmod(2),Zmod(2))"')
        sp.add_argument("--max-size", type=_positive, default=4096, help="largest ring accepted")
        if needs_x:
            sp.add_argument("--x", required=True, help="element literal in the ring's naming scheme")

    sp = sub.add_parser("classify", help="irreducibility flags of non-units")
    ring_args(sp)
    sp.add_argument("--x", help="classify one element only")
    sp.add_argument("--format", choices=["text", "json"], default="text")

    sp = sub.add_parser("factor", help="factorizations of x up to rearrangement and β")
    ring_args(sp, needs_x=True)
    sp.add_argument("--alpha", type=_atom, default=Atom.IRREDUCIBLE, help="/".join(ALPHA_TOKENS))
    sp.add_argument("--beta", type=_assoc, default=Assoc.ASSOC, help="/".join(BETA_TOKENS))
    sp.add_argument("--cap", type=_positive, default=6, help="longest factorization listed")
    sp.add_argument("--limit", type=_positive, help="stop after this many")
    sp.add_argument("--format", choices=["text", "json"], default="text")

    sp = sub.add_parser("graph", help="the divisor graph G_alpha^beta(x)")
    ring_args(sp, needs_x=True)
    sp.add_argument("--alpha", type=_atom, default=Atom.IRREDUCIBLE, help="/".join(ALPHA_TOKENS))
    sp.add_argument("--beta", type=_assoc, default=Assoc.ASSOC, help="/".join(BETA_TOKENS))
    sp.add_argument("--format", choices=["text", "dot", "json"], default="text")
    sp.add_argument("--output", help="write to this file instead of stdout")

    sp = sub.add_parser("props", help="ring-level factorization properties")
    ring_args(sp)
    sp.add_argument("--include-zero", action="store_true", help="also report with 0 in the element scope")
    sp.add_argument("--format", choices=["text", "json"], default="text")

    sp = sub.add_parser("verify", help="check every theorem over a ring corpus")
    sp.add_argument("--corpus", help="file with one ring spec per line (default: built-in corpus)")
    sp.add_argument("--only", action="append", help="theorem id, repeatable or comma separated")
    sp.add_argument("--include-zero", action="store_true")
    sp.add_argument("--jobs", type=_positive, default=1)
    sp.add_argument("--format", choices=["text", "json"], default="text")
    sp.add_argument("--output", help="also write the JSON report here")
    return p


def _ring(args):
    try:
        return build_ring(args.ring, max_size=args.max_size)
    except (RingError, OSError) as e:
        raise UsageError(str(e)) from None


def _element(ring, literal):
    try:
        return ring.element(literal)
    except (RingError, ValueError) as e:
        raise UsageError(f"cannot parse element {literal!r} in {ring.spec}: {e}") from None


def _flags(p) -> dict:
    return {"prime": p.prime, "irr": p.irreducible, "s-irr": p.strong,
            "m-irr": p.m_irreducible, "vs-irr": p.very_strong, "self-vs": p.self_vs}


def cmd_classify(args) -> tuple[int, str]:
    ring = _ring(args)
    if args.x is not None:
        items = [classify(ring, _element(ring, args.x))]
    else:
        items = list(profiles(ring).values())
    if args.format == "json":
        doc = {"ring": ring.spec, "elements": [{"element": ring.name(p.element), **_flags(p)} for p in items]}
        return EXIT_OK, json.dumps(doc, indent=2) + "\n"
    width = max([len("element")] + [len(ring.name(p.element)) for p in items])
    cols = ["prime", "irr", "s-irr", "m-irr", "vs-irr", "self-vs"]
    lines = [f"ring: {ring.spec}", f"{'element':<{width}}  " + "  ".join(f"{c:<6}" for c in cols).rstrip()]
    for p in items:
        f = _flags(p)
        lines.append(f"{ring.name(p.element):<{width}}  " + "  ".join(f"{'yes' if f[c] else 'no':<6}" for c in cols).rstrip())
    return EXIT_OK, "\n".join(lines) + "\n"


def cmd_factor(args) -> tuple[int, str]:
    ring = _ring(args)
    x = _element(ring, args.x)
    en = enumerate_factorizations(ring, x, args.alpha, args.beta, args.cap, limit=args.limit)
    if args.format == "json":
        doc = {"ring": ring.spec, "x": ring.name(x), "alpha": args.alpha.value, "beta": args.beta.value,
               "cap": args.cap, "truncated": en.truncated, "complete": en.complete,
               "factorizations": [[ring.name(a) for a in f.factors] for f in en.factorizations]}
        return EXIT_OK, json.dumps(doc, indent=2) + "\n"
    lines = [f"{ring.name(x)} in {ring.spec}, alpha={args.alpha.value}, beta={args.beta.value}, cap={args.cap}"]
    lines += [f"  {f.render(ring)}" for f in en.factorizations]
    lines.append(f"count: {len(en.factorizations)}")
    if not en.complete:
        lines.append("stopped at the limit")
    lines.append(f"truncated: {'yes' if en.truncated else 'no'}")
    return EXIT_OK, "\n".join(lines) + "\n"


def render_graph_text(g) -> str:
    ring = g.ring
    m = graph_metrics(g)
    lines = [f"{g.label()} over {ring.spec}", f"vertices: {len(g.vertices)}"]
    for v in g.vertices:
        members = ",".join(ring.name(a) for a in g.classes[v])
        lines.append(f"  {ring.name(v)}  class={{{members}}}  deg={degree(g, v)} "
                     f"degl={fmt_ext(degl(g, v))} loops={fmt_ext(g.loops[v])}")
    lines.append(f"edges: {len(g.edges)}")
    lines += [f"  {ring.name(a)} -- {ring.name(b)}" for a, b in sorted(g.edges)]
    lines.append("metrics: " + " ".join(f"{k}={str(v).lower() if isinstance(v, bool) else v}"
                                        for k, v in m.items()))
    if m["empty"]:
        lines.append("note: empty graph, diameter reported as 0")
    return "\n".join(lines) + "\n"


def cmd_graph(args) -> tuple[int, str]:
    ring = _ring(args)
    x = _element(ring, args.x)
    g = build_divisor_graph(ring, x, args.alpha, args.beta)
    if args.format == "dot":
        out = to_dot(g)
    elif args.format == "json":
        out = json.dumps(to_dict(g), indent=2) + "\n"
    else:
        out = render_graph_text(g)
    if args.output:
        Path(args.output).write_text(out)
        return EXIT_OK, ""
    return EXIT_OK, out


def cmd_props(args) -> tuple[int, str]:
    ring = _ring(args)
    reports = [property_report(ring, False)]
    notes = []
    if args.include_zero:
        reports.append(property_report(ring, True))
        notes = scope_notes(reports[0], reports[1])
    if args.format == "json":
        doc = {"schema": 1, "ring": ring.spec, "scopes": [r.to_dict() for r in reports], "notes": notes}
        return EXIT_OK, json.dumps(doc, indent=2, ensure_ascii=False) + "\n"
    return EXIT_OK, render_report(reports, notes)


def cmd_verify(args) -> tuple[int, str]:
    path = args.corpus or default_corpus_path()
    base_dir = None
    if path:
        try:
            corpus = load_corpus(path)
        except OSError as e:
            raise UsageError(f"cannot read corpus {path}: {e}") from None
        base_dir = str(Path(path).resolve().parent)
    else:
        corpus = list(DEFAULT_CORPUS)
    only = None
    if args.only:
        only = tuple(t.strip() for item in args.only for t in item.split(",") if t.strip())
    config = SuiteConfig(include_zero=args.include_zero, only=only, jobs=args.jobs)
    try:
        config.selected()
    except ValueError as e:
        raise UsageError(str(e)) from None
    reports = run_suite(corpus, config, base_dir=base_dir)
    if args.output:
        Path(args.output).write_text(render_json(reports))
    out = render_json(reports) if args.format == "json" else render_text(reports)
    return (EXIT_OK if suite_passed(reports) else EXIT_THEOREM), out


COMMANDS = {"classify": cmd_classify, "factor": cmd_factor, "graph": cmd_graph,
            "props": cmd_props, "verify": cmd_verify}


def run(argv=None) -> tuple[int, str, str]:
    """Run a command; returns (exit code, stdout text, stderr text)."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0), "", ""
    try:
        code, out = COMMANDS[args.command](args)
        return code, out, ""
    except UsageError as e:
        return EXIT_USAGE, "", f"error: {e}\n"
    except UnitElementError as e:
        return EXIT_DOMAIN, "", f"error: {e}\n"


def main(argv=None) -> int:
    code, out, err = run(argv)
    sys.stdout.write(out)
    sys.stderr.write(err)
    return code


if __name__ == "__main__":
    sys.exit(main())
