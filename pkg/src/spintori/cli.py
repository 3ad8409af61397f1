"""Command line front end.

Subcommands:

  enumerate   list the torus classes for a degree and form
  structure   closed form for one class, optionally checked at a given q
  table       every class of a degree and form with its closed form
  verify      sweep degrees and q values, closed form against lattice
  snf         Smith normal form of a matrix read from a file

Exit codes: 0 ok, 1 a check failed, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .matrices import (
    MatrixFormatError,
    PipelineDegenerateError,
    format_matrix_text,
    parse_matrix_text,
    reduced_form_identity,
    reduced_torus_matrix,
    torus_matrix,
)
from .permutations import (
    FORM_MINUS,
    FORM_PLUS,
    SignedCycleType,
    TorusClass,
    enumerate_classes,
)
from .smith import invariant_factors, smith_normal_form
from .tori import (
    TorusDecomposition,
    alternative_decomposition,
    canonical_invariants,
    closed_form_decomposition,
    is_prime_power,
    torus_order,
)

FORM_SIGIL = {FORM_PLUS: "+", FORM_MINUS: "-"}

# Rows whose published value is known to disagree with both computation
# routes, keyed by (degree, form, parts).  The table command marks them.
KNOWN_MISPRINTS = {
    (4, FORM_PLUS, (2, 2)): (
        "some tabulations print Z_{q^2-1} x Z_{q+1} x Z_{q+1} here, which has "
        "order (q^2-1)(q+1)^2 instead of the class order (q^2-1)^2"
    ),
}


def _fmt_ints(values) -> str:
    return ", ".join(str(v) for v in values) if values else "(none)"


def _report_entry(dec: TorusDecomposition, q: int | None = None) -> dict:
    entry = {
        "l": dec.ctype.degree,
        "form": FORM_SIGIL[dec.ctype.form],
        "type": dec.ctype.literal(),
        "split": dec.split,
        "case": dec.case,
        "factors": [[list(t) for t in f.terms] for f in dec.factors],
    }
    if q is not None:
        orders = dec.orders(q)
        invariants = canonical_invariants(orders)
        oracle = canonical_invariants(invariant_factors(torus_matrix(TorusClass(dec.ctype, dec.split), q)))
        entry.update(
            q=q,
            orders=list(orders),
            invariants=list(invariants),
            oracle_invariants=list(oracle),
            match=invariants == oracle,
        )
    return entry


def _emit_json(obj) -> None:
    sys.stdout.write(json.dumps(obj, indent=2) + "\n")


def _warn_composite_q(q: int) -> None:
    if not is_prime_power(q):
        print(f"note: q={q} is not a prime power; orders are formal values", file=sys.stderr)


def _cmd_enumerate(args) -> int:
    classes = enumerate_classes(args.l, args.form)
    for cls in classes:
        print(cls.literal())
    print(f"{len(classes)} classes")
    return 0


def _cmd_structure(args) -> int:
    try:
        cls = TorusClass.parse(args.type)
    except ValueError as exc:
        args.parser.error(str(exc))
    if cls.ctype.degree != args.l:
        args.parser.error(f"type {args.type!r} has degree {cls.ctype.degree}, not l={args.l}")
    if cls.ctype.form != args.form:
        args.parser.error(f"type {args.type!r} belongs to form {FORM_SIGIL[cls.ctype.form]}")
    defaulted = False
    if cls.split is None and cls.ctype.is_split_eligible():
        cls = TorusClass(cls.ctype, "+")
        defaulted = True
    dec = closed_form_decomposition(cls)
    if args.q is not None:
        _warn_composite_q(args.q)
        assert dec.order(args.q) == torus_order(cls, args.q)

    if args.format == "json":
        entry = _report_entry(dec, args.q)
        _emit_json(entry)
        return 0 if args.q is None or entry["match"] else 1

    print(f"type: {cls.literal()}")
    print(f"l: {cls.ctype.degree}")
    print(f"form: {FORM_SIGIL[cls.ctype.form]}")
    if cls.split is not None:
        print(f"split: {cls.split}" + (" (defaulted)" if defaulted else ""))
    print(f"case: {dec.case}")
    print(f"structure: {dec.symbolic()}")
    if args.q is None:
        return 0
    orders = dec.orders(args.q)
    invariants = canonical_invariants(orders)
    oracle = canonical_invariants(invariant_factors(torus_matrix(cls, args.q)))
    print(f"q: {args.q}")
    print(f"orders: {_fmt_ints(orders)}")
    print(f"invariants: {_fmt_ints(invariants)}")
    print(f"oracle: {_fmt_ints(oracle)}")
    ok = invariants == oracle
    print(f"verdict: {'MATCH' if ok else 'MISMATCH'}")
    return 0 if ok else 1


def _cmd_table(args) -> int:
    classes = enumerate_classes(args.l, args.form)

    if args.format == "json":
        _emit_json([_report_entry(closed_form_decomposition(cls)) for cls in classes])
        return 0

    rows = []
    notes = []
    seen_split = set()
    for cls in classes:
        if cls.split is not None:
            if cls.ctype in seen_split:
                continue
            seen_split.add(cls.ctype)
            label = f"{cls.ctype.literal()}:+/-"
        else:
            label = cls.ctype.literal()
        structure = closed_form_decomposition(cls).symbolic()
        note = KNOWN_MISPRINTS.get((args.l, args.form, cls.ctype.parts))
        if note is not None:
            structure += " [*]"
            notes.append(note)
        rows.append((label, structure))
    width = max(len(label) for label, _ in rows)
    width = max(width, len("type"))
    print(f"{'type':<{width}}  structure")
    for label, structure in rows:
        print(f"{label:<{width}}  {structure}")
    for note in notes:
        print()
        print(f"[*] computed value; {note}")
    return 0


def _cmd_verify(args) -> int:
    try:
        qs = [int(tok) for tok in args.q.split(",")]
    except ValueError:
        args.parser.error(f"bad q list: {args.q!r}")
    if any(q < 2 for q in qs):
        args.parser.error("q values must be at least 2")
    for q in qs:
        _warn_composite_q(q)

    failures = []
    total = 0
    for l in range(2, args.l_max + 1):
        count = 0
        fails_before = len(failures)
        for form in (FORM_PLUS, FORM_MINUS):
            for cls in enumerate_classes(l, form):
                dec = closed_form_decomposition(cls)
                for q in qs:
                    want = canonical_invariants(dec.orders(q))
                    got = canonical_invariants(invariant_factors(torus_matrix(cls, q)))
                    count += 1
                    if want != got:
                        failures.append((l, form, cls.literal(), q, "lattice"))
                    alt = alternative_decomposition(cls, q)
                    if alt is not None:
                        count += 1
                        if canonical_invariants(alt.orders(q)) != want:
                            failures.append((l, form, cls.literal(), q, "alternative"))
                    if l <= 6 and cls.split != "-" and len(cls.ctype.parts) >= 2:
                        count += 2
                        if not reduced_form_identity(cls.ctype, q):
                            failures.append((l, form, cls.literal(), q, "coupling identity"))
                        reduced = canonical_invariants(
                            invariant_factors(reduced_torus_matrix(cls.ctype, q))
                        )
                        if reduced != want:
                            failures.append((l, form, cls.literal(), q, "reduced matrix"))
        total += count
        print(f"l={l}: {count} checks, {len(failures) - fails_before} failures")
    for l, form, literal, q, what in failures:
        print(
            f"FAIL l={l} form={FORM_SIGIL[form]} type={literal} q={q}: {what}",
            file=sys.stderr,
        )
    print(f"total: {total} checks, {len(failures)} failures")
    return 1 if failures else 0


def _cmd_snf(args) -> int:
    if args.matrix == "-":
        text = sys.stdin.read()
    else:
        try:
            text = Path(args.matrix).read_text()
        except OSError as exc:
            args.parser.error(str(exc))
    try:
        mat = parse_matrix_text(text)
    except MatrixFormatError as exc:
        args.parser.error(str(exc))
    res = smith_normal_form(mat)
    sys.stdout.write("D:\n")
    sys.stdout.write(format_matrix_text(res.d))
    if args.witnesses:
        if not res.verify(mat):
            print("witness check failed", file=sys.stderr)
            return 1
        sys.stdout.write("P:\n")
        sys.stdout.write(format_matrix_text(res.p))
        sys.stdout.write("Q:\n")
        sys.stdout.write(format_matrix_text(res.q))
    print(f"invariant factors: {_fmt_ints(invariant_factors(mat))}")
    return 0


def _add_degree(sp, required=True):
    sp.add_argument("--l", type=int, required=required, metavar="L", help="degree, at least 2")


def _add_form(sp):
    sp.add_argument("--form", choices=(FORM_PLUS, FORM_MINUS), required=True)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spintori",
        description="cyclic decompositions of the maximal tori of the even spin groups",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("enumerate", help="list torus classes")
    _add_degree(sp)
    _add_form(sp)
    sp.set_defaults(func=_cmd_enumerate)

    sp = sub.add_parser("structure", help="closed form for one class")
    _add_degree(sp)
    _add_form(sp)
    sp.add_argument("--type", required=True, help="signed cycle type, e.g. 1,-2,-1 or 2,2:-")
    sp.add_argument("--q", type=int, default=None, help="evaluate and cross-check at this q")
    sp.add_argument("--format", choices=("text", "json"), default="text")
    sp.set_defaults(func=_cmd_structure)

    sp = sub.add_parser("table", help="all classes of a degree and form")
    _add_degree(sp)
    _add_form(sp)
    sp.add_argument("--format", choices=("text", "json"), default="text")
    sp.set_defaults(func=_cmd_table)

    sp = sub.add_parser("verify", help="cross-check both routes over a sweep")
    sp.add_argument("--l-max", type=int, default=4, metavar="L")
    sp.add_argument("--q", default="2,3,4,5", help="comma separated q values")
    sp.set_defaults(func=_cmd_verify)

    sp = sub.add_parser("snf", help="Smith normal form of a matrix file")
    sp.add_argument("matrix", help="path to a matrix file, or - for stdin")
    sp.add_argument("--witnesses", action="store_true", help="print and check P and Q")
    sp.set_defaults(func=_cmd_snf)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    args.parser = parser
    if hasattr(args, "l") and args.l is not None and args.l < 2:
        parser.error("degree l must be at least 2")
    if hasattr(args, "l_max") and args.l_max < 2:
        parser.error("--l-max must be at least 2")
    if hasattr(args, "q") and isinstance(args.q, int) and args.q is not None and args.q < 2:
        parser.error("q must be at least 2")
    try:
        return args.func(args)
    except PipelineDegenerateError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
