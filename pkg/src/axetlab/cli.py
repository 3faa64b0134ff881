"""Command line front end.

Subcommands: verify (axis checks on an algebra file), axet (realize and
classify the axet generated by the declared axes), paper-suite (the full
reproduction suite), catalog (emit a built-in algebra as a file).

Exit codes: 0 pass, 1 verification failure, 2 parse or usage error.
"""

import argparse
import json
import sys
from fractions import Fraction

from . import algfile, papersuite
from .algfile import ParseError, emit_algebra_file, parse_algebra_file
from .axes import verify_axis
from .axets import (NotAnAxis, NotClosedWithinBound, TooLarge,
                    classify_shape, realize_axet)
from .catalog import (BadCharacteristic, make_2B, make_3C, make_3C_minus1_2,
                      make_3C_skew, make_orthogonal_branch, make_Q2_skew,
                      make_Q2_third, make_Q2x, make_Q2x_plus_one)
from .fusion import DegenerateParameter, make_jordan, make_monster
from .scalars import (BadField, DivisionByZero, ExprError, MixedFields,
                      UnboundSymbol, parse_scalar)

USAGE_ERRORS = (ParseError, BadField, BadCharacteristic, DegenerateParameter,
                ExprError, UnboundSymbol, MixedFields, DivisionByZero)
VERIFY_ERRORS = (NotAnAxis, NotClosedWithinBound, TooLarge)


class NoAxesDeclared(ValueError):
    pass


def _read(path):
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _write_report(path, payload):
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(json.dumps(payload, indent=2, sort_keys=True) + "\n")


def _load_axes(args):
    doc = parse_algebra_file(_read(args.file))
    axes = doc.axes
    field = doc.algebra.field
    if getattr(args, "law", None):
        alpha = parse_scalar(args.law[0], field)
        beta = parse_scalar(args.law[1], field)
        law = make_monster(alpha, beta)
        axes = [(el, law) for el, _ in axes]
    elif getattr(args, "jordan", None):
        law = make_jordan(parse_scalar(args.jordan, field))
        axes = [(el, law) for el, _ in axes]
    if not axes:
        raise NoAxesDeclared("the file declares no axes")
    return doc, axes


def cmd_verify(args):
    doc, axes = _load_axes(args)
    rows = []
    ok = True
    for i, (element, law) in enumerate(axes, start=1):
        report = verify_axis(doc.algebra, element, law)
        ok = ok and report.passed
        rows.append({"axis": i, "passed": report.passed,
                     "summary": report.summary()})
        print("axis %d: %s  %s" % (i, "pass" if report.passed else "FAIL",
                                   report.summary()))
    _write_report(args.report, {"command": "verify", "file": args.file,
                                "passed": ok, "axes": rows})
    return 0 if ok else 1


def cmd_axet(args):
    doc, axes = _load_axes(args)
    # realize under a common ambient law: jordan axes of a monster-law
    # algebra have empty odd part there, so their involutions collapse
    ambient = next((law for _, law in axes if len(law.eigenvalues) == 4),
                   None)
    if ambient is not None:
        axes = [(el, ambient) for el, _ in axes]
    realized = realize_axet(doc.algebra, axes, max_points=args.max_points)
    label = classify_shape(realized, max_points=args.max_points)
    note = " (degenerate: single point)" if realized.size == 1 else ""
    plural = "" if realized.size == 1 else "s"
    print("%s with %d point%s%s" % (label, realized.size, plural, note))
    _write_report(args.report, {"command": "axet", "file": args.file,
                                "shape": label, "points": realized.size})
    return 0


def cmd_paper_suite(args):
    report = papersuite.run_suite(args.char)
    print(report.to_text())
    if args.report:
        with open(args.report, "w", encoding="utf-8") as fh:
            fh.write(report.to_json() + "\n")
    return 0 if report.passed else 1


def _catalog_document(name, alpha):
    def frac(default=None):
        if alpha is None:
            if default is None:
                raise DegenerateParameter("%s needs --alpha" % name)
            return default
        return Fraction(alpha)

    if name == "2B":
        A = make_2B()
        law = make_jordan(Fraction(1, 2))
        return A, [(A.gen("a"), law), (A.gen("b"), law)]
    if name == "3C":
        A = make_3C(frac())
        law = make_jordan(frac())
        return A, [(A.gen(n), law) for n in A.basis_names]
    if name == "3C-skew":
        ex = make_3C_skew(frac())
        return ex.algebra, [(ex.m_axis, ex.m_law), (ex.j_axis, ex.j_law)]
    if name == "3C-1-2":
        ex = make_3C_minus1_2()
        return ex.algebra, [(ex.m_axis, ex.m_law), (ex.j_axis, ex.j_law)]
    if name == "Q2":
        A = make_Q2_third()
        j = make_jordan(Fraction(1, 3))
        m = make_monster(Fraction(2, 3), Fraction(1, 3))
        return A, [(A.gen("s1"), j), (A.gen("s2"), j),
                   (A.gen("d1"), m), (A.gen("d2"), m)]
    if name == "Q2-skew":
        ex = make_Q2_skew()
        return ex.algebra, [(ex.m_axis, ex.m_law), (ex.j_axis, ex.j_law)]
    if name == "Q2x":
        A = make_Q2x()
        m = make_monster(A.field.coerce(Fraction(2, 3)),
                         A.field.coerce(Fraction(1, 3)))
        return A, [(A.gen("x"), m), (A.gen("z"), m)]
    if name == "Q2x5":
        ex = make_Q2x_plus_one()
        return ex.algebra, [(ex.m_axis, ex.m_law), (ex.j_axis, ex.j_law)]
    if name == "orthogonal":
        ex = make_orthogonal_branch()
        return ex.algebra, [(ex.m_axis, ex.m_law), (ex.j_axis, ex.j_law)]
    raise ParseError("unknown catalog name %r" % name, 1)


CATALOG_NAMES = ("2B", "3C", "3C-skew", "3C-1-2", "Q2", "Q2-skew", "Q2x",
                 "Q2x5", "orthogonal")


def cmd_catalog(args):
    algebra, axes = _catalog_document(args.name, args.alpha)
    text = emit_algebra_file(algebra, axes)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="axetlab",
        description="Exact-arithmetic workbench for axial algebras and "
                    "axets.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="check the declared axes of a file")
    p.add_argument("file")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--law", nargs=2, metavar=("ALPHA", "BETA"),
                       help="verify all axes under this monster law")
    group.add_argument("--jordan", metavar="ETA",
                       help="verify all axes under this jordan law")
    p.add_argument("--report", help="write a JSON report here")
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("axet", help="realize and classify the axet of a "
                                    "file's axes")
    p.add_argument("file")
    p.add_argument("--max-points", type=int, default=24)
    p.add_argument("--report", help="write a JSON report here")
    p.set_defaults(fn=cmd_axet)

    p = sub.add_parser("paper-suite", help="run the full reproduction suite")
    p.add_argument("--char", type=int, default=0, choices=(0, 5))
    p.add_argument("--report", help="write a JSON report here")
    p.set_defaults(fn=cmd_paper_suite)

    p = sub.add_parser("catalog", help="emit a built-in algebra as a file")
    p.add_argument("name", choices=CATALOG_NAMES)
    p.add_argument("--alpha", help="parameter for the 3C families")
    p.add_argument("-o", "--output", help="write the file here")
    p.set_defaults(fn=cmd_catalog)
    return parser


def main(argv=None):
    argv = list(sys.argv[1:] if argv is None else argv)
    # tolerate "catalog emit <name>" for the emit-style calling convention
    if len(argv) >= 2 and argv[0] == "catalog" and argv[1] == "emit":
        del argv[1]
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code else 0
    try:
        return args.fn(args)
    except USAGE_ERRORS as e:
        print("error: %s" % e, file=sys.stderr)
        return 2
    except NoAxesDeclared as e:
        print("error: %s" % e, file=sys.stderr)
        return 2
    except VERIFY_ERRORS as e:
        print("error: %s" % e, file=sys.stderr)
        return 1
    except (OSError, ValueError) as e:
        print("error: %s" % e, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
