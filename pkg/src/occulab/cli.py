"""Command-line interface: ``occulab <subcommand> ...``.

Graph operands are named graphs (``petersen``, ``generalized_petersen:7,2``,
``circulant:13:1,5``) or graph6 strings.  Where a weighted set is expected an
i-vector may be given instead as ``1,10,30,30,5@10`` (counts, then order), or
one of the embedded vectors ``@g38`` / ``@h38``.  ``-`` reads lines from stdin.
Results go to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from typing import Iterable, Optional

from . import data
from .exactalg import DEFAULT_TOL, descartes_sign_changes
from .graph_core import Graph6Error, generate_regular, parse_graph6, parse_graph_spec, write_graph6
from .graph_core.named import named_graph
from .homcount import galvin_check, hom_count, parse_target_spec
from .indpoly import MultiplicityVector, enumerate_independent_sets
from .occupancy import (
    WeightedSet,
    compare_normalized_partition,
    compare_occupancy,
    critical_filter,
    expected_value,
    occupancy_fraction,
)
from . import verify as verify_mod

EMBEDDED_VECTORS = {
    "g38": (data.G38_VECTOR, 38),
    "h38": (data.TUTTE_COXETER_VECTOR, 30),
}


def _threads() -> int:
    try:
        return max(1, int(os.environ.get("OCCULAB_THREADS", "1")))
    except ValueError:
        return 1


def _pmap(fn, items: list):
    """Order-preserving map, fanned out when OCCULAB_THREADS > 1."""
    workers = _threads()
    if workers == 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))


def _lines(operands: Iterable[str]) -> list[str]:
    out = []
    for op in operands:
        if op == "-":
            out.extend(line.strip() for line in sys.stdin)
        else:
            out.append(op)
    return out


def weighted_operand(text: str) -> WeightedSet:
    if text.startswith("@"):
        vec, n = EMBEDDED_VECTORS[text[1:].lower()]
        return WeightedSet(vec, n, text[1:])
    if "," in text and "@" in text:
        vec, _, n = text.partition("@")
        return WeightedSet(MultiplicityVector.from_text(vec), int(n), text)
    if "," in text and ":" not in text:
        return WeightedSet(MultiplicityVector.from_text(text), None, text)
    g = parse_graph_spec(text)
    return WeightedSet(enumerate_independent_sets(g), g.n, text)


def _fmt(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _decimal(x: Fraction, digits: int = 9) -> str:
    return f"{float(x):.{digits}f}"


# -- subcommands -----------------------------------------------------------


def _ivector_line(line: str):
    try:
        g = parse_graph_spec(line)
    except (Graph6Error, KeyError, ValueError) as exc:
        return None, str(exc)
    return enumerate_independent_sets(g).to_text(), None


def cmd_ivector(args) -> int:
    lines = [l for l in _lines(args.inputs) if l]
    status = 0
    for lineno, (vec, err) in enumerate(_pmap(_ivector_line, lines), start=1):
        if err is not None:
            print(f"line {lineno}: {err}", file=sys.stderr)
            status = 1
        else:
            print(vec)
    return status


def cmd_occupancy(args) -> int:
    ws = weighted_operand(args.operand)
    rf = occupancy_fraction(ws) if ws.order is not None else expected_value(ws)
    out = {"numerator": rf.num.to_text(), "denominator": rf.den.to_text()}
    if args.at:
        x = Fraction(args.at)
        out["value"] = _fmt(rf.evaluate(x))
        out["decimal"] = _decimal(rf.evaluate(x))
    print(json.dumps(out))
    return 0


def cmd_compare(args) -> int:
    a, b = weighted_operand(args.a), weighted_operand(args.b)
    prof = compare_normalized_partition(a, b) if args.normalized else compare_occupancy(a, b)
    tol = Fraction(args.tol)
    out = {
        "kind": "normalized-partition" if args.normalized else "occupancy",
        "polynomial": prof.polynomial.to_text(),
        "profile": prof.to_json_obj(),
        "roots": [_decimal(r) for r in prof.roots(tol)],
    }
    if not prof.identically_zero:
        out["descartes"] = descartes_sign_changes(prof.polynomial)
    print(json.dumps(out))
    return 0


def cmd_filter(args) -> int:
    entries = []
    for lineno, line in enumerate(_lines(args.inputs), start=1):
        if not line:
            continue
        if "," in line:
            if args.order is None and "@" not in line:
                print(f"line {lineno}: i-vector input needs --order or a '@n' suffix", file=sys.stderr)
                return 2
            text = line if "@" in line else f"{line}@{args.order}"
            entries.append((line, weighted_operand(text)))
        else:
            try:
                g = parse_graph6(line)
            except Graph6Error as exc:
                print(f"line {lineno}: {exc}", file=sys.stderr)
                return 2
            entries.append((line, g))
    graphs = [(i, e) for i, (_, e) in enumerate(entries) if not isinstance(e, WeightedSet)]
    vectors = _pmap(enumerate_independent_sets, [g for _, g in graphs])
    sets = [e if isinstance(e, WeightedSet) else None for _, e in entries]
    for (i, g), vec in zip(graphs, vectors):
        sets[i] = WeightedSet(vec, g.n, entries[i][0])
    orders = {s.order for s in sets}
    if len(orders) > 1:
        print(f"mixed orders {sorted(orders)}; the filter compares graphs of one order", file=sys.stderr)
        return 2
    for i, s in enumerate(sets):
        object.__setattr__(s, "name", str(i))
    for s in critical_filter(sets, args.mode):
        src = entries[int(s.name)][0]
        print(f"{src}\t{s.vector.to_text()}" if "," not in src else s.vector.to_text())
    return 0


def cmd_generate(args) -> int:
    count = 0
    for g in generate_regular(args.n, args.d, args.girth):
        print(write_graph6(g))
        count += 1
    print(f"{count} graphs", file=sys.stderr)
    return 0


def cmd_hom(args) -> int:
    g, h = parse_graph_spec(args.source), parse_graph_spec(args.target)
    print(hom_count(g, h))
    return 0


def cmd_galvin(args) -> int:
    g = parse_graph_spec(args.source)
    spec = parse_target_spec(args.target, parse_graph_spec)
    res = galvin_check(g, spec, args.degree)
    print(json.dumps({
        "verdict": res.verdict,
        "hom_G_H": str(res.hom_g),
        "hom_Kdd_H": str(res.hom_kdd),
        "hom_Kd1_H": str(res.hom_kd1),
        "power": res.exponent,
        "lhs": f"hom_G_H^{res.exponent}",
        "rhs_bipartite": f"hom_Kdd_H^{g.n * (args.degree + 1)}",
        "rhs_clique": f"hom_Kd1_H^{2 * args.degree * g.n}",
        "lhs_bits": res.lhs.bit_length(),
        "rhs_bipartite_bits": res.rhs_bipartite.bit_length(),
        "rhs_clique_bits": res.rhs_clique.bit_length(),
    }))
    return 0


def cmd_verify(args) -> int:
    try:
        reports = verify_mod.run(args.theorem, args.graph6_file)
    except KeyError as exc:
        print(exc.args[0], file=sys.stderr)
        return 2
    ok = True
    for rep in reports:
        print(json.dumps(rep.to_dict()))
        mark = "PASS" if rep.passed else "FAIL"
        print(f"[{mark}] {rep.theorem} ({rep.seconds:.3f}s)", file=sys.stderr)
        for c in rep.claims:
            if not c.passed:
                print(f"    failed: {c.name}: claimed {c.claimed}, computed {c.computed}", file=sys.stderr)
        ok &= rep.passed
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="occulab", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("ivector", help="independent-set counts by size")
    s.add_argument("inputs", nargs="*", default=["-"])
    s.set_defaults(func=cmd_ivector)

    s = sub.add_parser("occupancy", help="occupancy fraction as a rational function")
    s.add_argument("operand")
    s.add_argument("--at", help="evaluate at this rational fugacity, e.g. 1/10")
    s.set_defaults(func=cmd_occupancy)

    s = sub.add_parser("compare", help="sign profile of alpha_a - alpha_b on (0, inf)")
    s.add_argument("a")
    s.add_argument("b")
    s.add_argument("--normalized", action="store_true", help="compare P_a^(1/n_a) with P_b^(1/n_b) instead")
    s.add_argument("--tol", default=str(DEFAULT_TOL))
    s.set_defaults(func=cmd_compare)

    s = sub.add_parser("filter", help="critical graphs under ratio dominance")
    s.add_argument("inputs", nargs="*", default=["-"])
    s.add_argument("--mode", choices=("min", "max"), default="min")
    s.add_argument("--order", type=int)
    s.set_defaults(func=cmd_filter)

    s = sub.add_parser("generate", help="connected regular graphs as graph6")
    s.add_argument("n", type=int)
    s.add_argument("d", type=int)
    s.add_argument("girth", type=int, nargs="?", default=3)
    s.set_defaults(func=cmd_generate)

    s = sub.add_parser("hom", help="count homomorphisms source -> target")
    s.add_argument("source")
    s.add_argument("target")
    s.set_defaults(func=cmd_hom)

    s = sub.add_parser("galvin", help="check the Galvin inequality for a factored target")
    s.add_argument("source")
    s.add_argument("--target", required=True, help="e.g. h0:216,complete:3:1")
    s.add_argument("--degree", "-d", type=int, required=True)
    s.set_defaults(func=cmd_galvin)

    s = sub.add_parser("verify", help="reproduce the published claims")
    s.add_argument("theorem", nargs="?", default="all")
    s.add_argument("--graph6-file")
    s.set_defaults(func=cmd_verify)
    return p


def main(argv: Optional[list[str]] = None) -> int:
    if hasattr(sys, "set_int_max_str_digits"):
        sys.set_int_max_str_digits(0)
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (Graph6Error, KeyError, ValueError) as exc:
        print(f"occulab {args.command}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
