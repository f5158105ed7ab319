"""Command-line front door.

Exit codes: 0 success, 1 mathematical failure (validation violation, stuck
reduction, triggered precondition), 2 input/parse failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .catalog import example_names, get_example, run_all
from .chains import (
    HomologySummary,
    euler_cells,
    euler_homology,
    homology,
    validate_complex,
)
from .cw import RegularCW, cw_to_morse, from_simplicial, validate_regular
from .errors import MorsetwistError, ParseError
from .invariants import (
    check_inequalities,
    hspace_obstruction,
    novikov_numbers,
    parallel_form_obstruction,
    rank_of_class,
)
from .morse import LocalSystem, MorseDatum, build_cochain, build_complex
from .serial import dump_json, facets_from_text, load_json

EXIT_OK = 0
EXIT_MATH = 1
EXIT_IO = 2


def _parse_class(text):
    if text is None:
        return None
    try:
        return tuple(Fraction(part.strip()) for part in text.split(","))
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"bad class vector {text!r}: {exc}") from exc


def _parse_zeros(text):
    if text is None:
        return None
    try:
        return tuple(int(part.strip()) for part in text.split(","))
    except ValueError as exc:
        raise ParseError(f"bad zero counts {text!r}: {exc}") from exc


def _load_datum(args) -> MorseDatum:
    if getattr(args, "example", None):
        return get_example(args.example).datum
    if not getattr(args, "input", None):
        raise ParseError("need an input file or --example NAME")
    try:
        with open(args.input) as fh:
            value = load_json(fh.read())
    except OSError as exc:
        raise ParseError(f"cannot read {args.input}: {exc}") from exc
    if isinstance(value, RegularCW):
        return cw_to_morse(value)
    return value


def _make_system(args) -> LocalSystem:
    flavor = getattr(args, "system", None) or "trivial"
    cls = _parse_class(getattr(args, "class_vector", None))
    if flavor == "trivial":
        return LocalSystem.trivial()
    if flavor == "unit-rep":
        return LocalSystem.unit_rep()
    if cls is None:
        raise ParseError(f"--system {flavor} requires --class")
    if flavor == "exp":
        return LocalSystem.exp(cls)
    if flavor == "nov":
        return LocalSystem.nov(cls)
    raise ParseError(f"unknown system {flavor!r}")


_REGIME_LABEL = {"INT": "Z", "EXPSUM": "R", "NOV": "Nov"}


def _degree_text(regime, betti, torsion, status="complete"):
    if status != "complete":
        return "indeterminate (reduction stuck)"
    label = _REGIME_LABEL[regime]
    parts = []
    if betti == 1:
        parts.append(label)
    elif betti > 1:
        parts.append(f"{label}^{betti}")
    for t in torsion:
        parts.append(f"{label}/{t}")
    return " + ".join(parts) if parts else "0"


def _summary_dict(summary: HomologySummary):
    return {
        "regime": summary.regime,
        "degrees": list(range(len(summary.degrees))),
        "betti": [d.betti for d in summary.degrees],
        "torsion": [list(d.torsion) for d in summary.degrees],
        "status": [d.status for d in summary.degrees],
    }


def _emit(obj, args, text_lines):
    if getattr(args, "format", "text") == "json":
        print(json.dumps(obj, indent=2))
    else:
        for line in text_lines:
            print(line)


def _print_summary(summary: HomologySummary, args, symbol="H_"):
    lines = []
    for k, d in enumerate(summary.degrees):
        lines.append(f"{symbol}{k} = "
                     f"{_degree_text(summary.regime, d.betti, d.torsion, d.status)}")
    _emit(_summary_dict(summary), args, lines)
    return EXIT_OK if summary.complete else EXIT_MATH


def cmd_validate(args) -> int:
    try:
        with open(args.input) as fh:
            value = load_json(fh.read())
    except OSError as exc:
        raise ParseError(f"cannot read {args.input}: {exc}") from exc
    problems = []
    if isinstance(value, RegularCW):
        bad = validate_regular(value)
        if bad is not None:
            problems.append(f"regularity: {bad.describe()}")
        else:
            value = cw_to_morse(value)
    if isinstance(value, MorseDatum):
        bad = validate_complex(build_complex(value, LocalSystem.trivial()))
        if bad is not None:
            problems.append(f"untwisted complex: {bad.describe()}")
        if all(f.unit_tag is not None for f in value.flows) and value.flows:
            bad = validate_complex(build_complex(value, LocalSystem.unit_rep()))
            if bad is not None:
                problems.append(f"unit-tag complex: {bad.describe()}")
    if problems:
        for p in problems:
            print(f"FAIL {p}")
        return EXIT_MATH
    print("ok")
    return EXIT_OK


def cmd_homology(args) -> int:
    d = _load_datum(args)
    sys_ = _make_system(args)
    summary = homology(build_complex(d, sys_), depth=args.depth,
                       max_iter=args.max_iter)
    return _print_summary(summary, args, symbol="H_")


def cmd_cohomology(args) -> int:
    d = _load_datum(args)
    sys_ = _make_system(args)
    summary = homology(build_cochain(d, sys_), depth=args.depth,
                       max_iter=args.max_iter)
    return _print_summary(summary, args, symbol="H^")  # renders H^0, H^1, ...


def cmd_novikov(args) -> int:
    d = _load_datum(args)
    cls = _parse_class(args.class_vector)
    if cls is None:
        raise ParseError("novikov requires --class")
    nn = novikov_numbers(d, cls, depth=args.depth, max_iter=args.max_iter)
    obj = {
        "class": [str(c) for c in nn.class_vector],
        "degrees": list(range(len(nn.b))),
        "b": list(nn.b),
        "q": list(nn.q),
        "status": list(nn.status),
    }
    lines = [f"class {','.join(str(c) for c in nn.class_vector)}"]
    for k in range(len(nn.b)):
        lines.append(f"degree {k}: b={nn.b[k]} q={nn.q[k]}"
                     + ("" if nn.status[k] == "complete" else " (stuck)"))
    zeros = _parse_zeros(args.zeros)
    if zeros is not None:
        rep = check_inequalities(zeros, nn)
        obj["zeros"] = list(zeros)
        obj["slack"] = list(rep.slack)
        obj["pass"] = rep.passed
        lines.append(f"zero-count bounds: slack "
                     f"{','.join(str(s) for s in rep.slack)} -> "
                     f"{'pass' if rep.passed else 'FAIL'}")
    _emit(obj, args, lines)
    if not nn.complete:
        return EXIT_MATH
    if zeros is not None and not rep.passed:
        return EXIT_MATH
    return EXIT_OK


def cmd_euler(args) -> int:
    d = _load_datum(args)
    sys_ = _make_system(args)
    cpx = build_complex(d, sys_)
    chi_cells = euler_cells(cpx)
    summary = homology(cpx, depth=args.depth, max_iter=args.max_iter)
    chi_hom = euler_homology(summary)
    obj = {"cells": chi_cells, "homology": chi_hom,
           "agree": chi_cells == chi_hom}
    _emit(obj, args, [f"euler (cells) = {chi_cells}",
                      f"euler (homology) = {chi_hom}",
                      f"agree: {str(chi_cells == chi_hom).lower()}"])
    return EXIT_OK if chi_cells == chi_hom else EXIT_MATH


def cmd_obstructions(args) -> int:
    d = _load_datum(args)
    sys_ = _make_system(args)
    cls = _parse_class(args.class_vector)
    verdicts = [hspace_obstruction(d, sys_, depth=args.depth,
                                   max_iter=args.max_iter)]
    if cls is not None and any(c != 0 for c in cls):
        verdicts.append(parallel_form_obstruction(
            d, cls, depth=args.depth, max_iter=args.max_iter))
    obj = {"verdicts": [
        {"kind": v.kind, "triggered": v.triggered, "witness": v.witness}
        for v in verdicts]}
    if cls is not None:
        obj["rank_of_class"] = rank_of_class(d, cls)
    lines = []
    for v in verdicts:
        lines.append(f"{v.kind}: {'TRIGGERED' if v.triggered else 'clear'}"
                     + (f" ({v.witness})" if v.witness else ""))
    if cls is not None:
        lines.append(f"rank of class: {obj['rank_of_class']}")
    _emit(obj, args, lines)
    return EXIT_OK


def cmd_from_triangulation(args) -> int:
    try:
        with open(args.input) as fh:
            fl = facets_from_text(fh.read())
    except OSError as exc:
        raise ParseError(f"cannot read {args.input}: {exc}") from exc
    cw = from_simplicial(fl)
    bad = validate_regular(cw)
    if bad is not None:
        print(f"FAIL {bad.describe()}")
        return EXIT_MATH
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(dump_json(cw))
    summary = homology(build_complex(cw_to_morse(cw), LocalSystem.trivial()))
    counts = tuple(len(layer) for layer in cw.cells)
    print(f"cells {','.join(str(c) for c in counts)}  "
          f"euler {sum((-1) ** k * c for k, c in enumerate(counts))}")
    for k, deg in enumerate(summary.degrees):
        print(f"H_{k} = {_degree_text('INT', deg.betti, deg.torsion)}")
    return EXIT_OK


def cmd_example(args) -> int:
    if args.action == "list":
        for name in example_names():
            print(name)
        return EXIT_OK
    if args.action == "show":
        if not args.name:
            raise ParseError("example show needs a NAME")
        entry = get_example(args.name)
        # description on stderr so stdout stays valid JSON for piping
        print(f"{entry.name}: {entry.description}", file=sys.stderr)
        sys.stdout.write(dump_json(entry.datum))
        return EXIT_OK
    # run
    names = [args.name] if args.name else None
    results = run_all(depth=args.depth, max_iter=args.max_iter, names=names)
    ok = True
    for r in results:
        status = "pass" if r.ok else "FAIL"
        extra = f" ({r.detail})" if r.detail else ""
        print(f"{status} [{r.entry}] {r.provenance}{extra}")
        ok = ok and r.ok
    return EXIT_OK if ok else EXIT_MATH


def _add_common(p, with_system=True, with_class=True):
    p.add_argument("input", nargs="?", help="input JSON file")
    p.add_argument("--example", help="use a built-in example instead of a file")
    if with_system:
        p.add_argument("--system", choices=["trivial", "unit-rep", "exp", "nov"],
                       default="trivial")
    if with_class:
        p.add_argument("--class", dest="class_vector", metavar="C1,C2,...",
                       help="rational class vector in the datum's form basis")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("--depth", type=Fraction, default=Fraction(16),
                   help="Novikov inversion depth (default 16)")
    p.add_argument("--max-iter", type=int, default=10000)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="morsetwist",
        description="Twisted Morse / cellular chain complexes with local "
                    "coefficients: integer homology with torsion, "
                    "exponential-twist cohomology, and Novikov numbers.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check a datum or CW file")
    p.add_argument("input")

    p = sub.add_parser("homology", help="twisted homology of a datum")
    _add_common(p)

    p = sub.add_parser("cohomology", help="twisted cochain cohomology")
    _add_common(p)

    p = sub.add_parser("novikov", help="Novikov numbers b_k, q_k")
    _add_common(p, with_system=False)
    p.add_argument("--zeros", metavar="C0,C1,...",
                   help="per-degree zero counts to test against the bounds")

    p = sub.add_parser("euler", help="Euler number, cells vs homology")
    _add_common(p)

    p = sub.add_parser("obstructions",
                       help="H-space and parallel-form obstruction verdicts")
    _add_common(p)

    p = sub.add_parser("from-triangulation",
                       help="facet list -> regular CW complex")
    p.add_argument("input", help="facet list file")
    p.add_argument("-o", "--output", help="write the CW complex JSON here")

    p = sub.add_parser("example", help="list, show, or replay the catalog")
    p.add_argument("action", choices=["list", "show", "run"])
    p.add_argument("name", nargs="?")
    p.add_argument("--depth", type=Fraction, default=Fraction(16))
    p.add_argument("--max-iter", type=int, default=10000)

    return ap


_DISPATCH = {
    "validate": cmd_validate,
    "homology": cmd_homology,
    "cohomology": cmd_cohomology,
    "novikov": cmd_novikov,
    "euler": cmd_euler,
    "obstructions": cmd_obstructions,
    "from-triangulation": cmd_from_triangulation,
    "example": cmd_example,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _DISPATCH[args.command](args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except MorsetwistError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MATH


if __name__ == "__main__":
    sys.exit(main())
