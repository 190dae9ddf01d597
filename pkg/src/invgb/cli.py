"""Command-line front end.

Exit status: 0 on success, 2 for bad input, 3 when an internal
consistency check fails.
"""

from __future__ import annotations

import argparse
import json
import sys

from .annihilator import form_vector, reduced_gb, trace_csv, viable_pair
from .errors import InvariantError, UsageError
from .field import parse_field
from .invform import InverseForm
from .sequence import (SequenceRecord, bm_variant, inverse_form, lc_profile,
                       intersect_annihilators, trace_seq, viable_pair_seq)

EXIT_OK, EXIT_USAGE, EXIT_INTERNAL = 0, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _inputs(args):
    """Yield (label, SequenceRecord or InverseForm) from exactly one source."""
    field = parse_field(args.field)
    sources = [x for x in (args.seq, args.invform, args.file) if x]
    if len(sources) != 1:
        raise UsageError("give exactly one of --seq, --invform, --file")
    items = []
    if args.seq:
        items = [("seq", t) for t in args.seq]
    elif args.invform:
        items = [("invform", args.invform)]
    else:
        stream = sys.stdin if args.file == "-" else _open(args.file)
        with stream:
            for line in stream:
                line = line.strip()
                if line and not line.startswith("#"):
                    items.append(("invform" if line.startswith("m") else "seq", line))
    out = []
    for kind, text in items:
        if kind == "seq":
            out.append(SequenceRecord.parse(text, field))
        else:
            out.append(InverseForm.parse(text, field))
    return out


def _open(path):
    try:
        return open(path, encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from exc


def _as_inverse(item):
    if isinstance(item, SequenceRecord):
        return inverse_form(item)
    return item


def _pair_of(item, trace=False):
    if isinstance(item, SequenceRecord):
        return viable_pair_seq(item, trace=trace)
    return viable_pair(item, trace=trace)


def _trace_rows(item):
    if isinstance(item, SequenceRecord):
        # label sequence rows by prefix length
        return trace_seq(item), (lambda row: 1 - row.i)
    return viable_pair(item, trace=True).trace, None


def _print_trace(rows, label):
    for row in rows:
        f1, f2 = row.pair_snapshot
        q = "-" if row.q is None else str(row.q)
        i = row.i if label is None else label(row)
        print(f"{i:>4}  q={q:<6} d={row.d:<4} B={int(row.B)}  f=({f1}, {f2})")


def _pair_json(item):
    F = _as_inverse(item)
    p = _pair_of(item)
    if F is None:
        data = {"f1": str(p.f1), "f2": str(p.f2), "form_vector": [], "degree_vector": [],
                "lambda": 0, "dimension": 0}
    else:
        data = form_vector(F).to_json()
    if isinstance(item, SequenceRecord):
        bm = bm_variant(item)
        data.update(mu=str(bm.mu), mu_prime=str(bm.mu_prime), lc=p.f1.degree,
                    lc_profile=lc_profile(item))
    return data


def cmd_pair(args):
    for idx, item in enumerate(_inputs(args)):
        if args.json:
            data = _pair_json(item)
            if args.reduced:
                F = _as_inverse(item)
                data["reduced"] = [str(g) for g in reduced_gb(F)] if F else ["1"]
            print(json.dumps(data))
            continue
        if args.csv:
            rows, label = _trace_rows(item)
            sys.stdout.write(trace_csv(rows, label))
            continue
        if idx:
            print()
        if args.trace:
            _print_trace(*_trace_rows(item))
        p = _pair_of(item)
        print(f"f = ({p.f1}, {p.f2})")
        if args.reduced:
            F = _as_inverse(item)
            basis = reduced_gb(F) if F is not None else ["1"]
            print("reduced = " + ", ".join(str(g) for g in basis))
    return EXIT_OK


def cmd_gb(args):
    for idx, item in enumerate(_inputs(args)):
        F = _as_inverse(item)
        if F is None:
            raise UsageError("the all-zero sequence has no proper annihilator ideal")
        res = form_vector(F)
        if args.json:
            print(json.dumps(res.to_json()))
            continue
        if idx:
            print()
        for k, g in enumerate(res.form_vector, 1):
            print(f"F{k} = {g}")
        print("N = (" + ", ".join(map(str, res.degree_vector)) + ")")
    return EXIT_OK


def cmd_rgb(args):
    for idx, item in enumerate(_inputs(args)):
        F = _as_inverse(item)
        basis = [str(g) for g in reduced_gb(F)] if F is not None else ["1"]
        if args.json:
            print(json.dumps(basis))
        else:
            print(", ".join(basis))
    return EXIT_OK


def cmd_lc(args):
    for item in _inputs(args):
        if not isinstance(item, SequenceRecord):
            F = item
            item = SequenceRecord(F.field, tuple(F.to_sequence()))
        prof = lc_profile(item)
        lc = prof[-1]
        if args.json:
            bm = bm_variant(item)
            p = viable_pair_seq(item)
            print(json.dumps({"lc": lc, "lc_profile": prof, "mu": str(bm.mu),
                              "mu_prime": str(bm.mu_prime), "f1": str(p.f1), "f2": str(p.f2)}))
        elif args.profile:
            print(",".join(map(str, prof)))
        else:
            print(lc)
    return EXIT_OK


def cmd_intersect(args):
    items = _inputs(args)
    if len(items) != 2 or not all(isinstance(x, SequenceRecord) for x in items):
        raise UsageError("intersect needs exactly two sequences (repeat --seq)")
    gens = intersect_annihilators(*items)
    if args.json:
        print(json.dumps([str(g) for g in gens]))
    else:
        for g in gens:
            print(g)
    return EXIT_OK


def cmd_verify(args):
    from .verify import run_verify

    results = run_verify(seed=args.seed, scale=args.scale)
    ok = True
    for name, passed, detail, cases in results:
        ok &= passed
        tag = "PASS" if passed else "FAIL"
        extra = "" if passed else f": {detail}"
        print(f"{tag} {name} (seed={args.seed}, cases={cases}){extra}")
    return EXIT_OK if ok else EXIT_INTERNAL


def cmd_bench(args):
    from .bench import ratios, run_bench

    sizes = [int(x) for x in args.sizes.split(",")] if args.sizes else None
    rows = run_bench(sizes=sizes or (1024, 2048, 4096), seed=args.seed, repeats=args.repeats)
    rat = ratios(rows)
    if args.json:
        print(json.dumps({
            "rows": [vars(r) for r in rows],
            "ratios": {f"{a}->{b}": v for (a, b), v in rat.items()},
        }))
        return EXIT_OK
    print(f"{'n':>6} {'mults':>10} {'bound':>10} {'seconds':>9} {'lc':>6}")
    for r in rows:
        print(f"{r.n:>6} {r.mults:>10} {r.bound:>10} {r.seconds:>9.4f} {r.lc:>6}")
    for (a, b), v in rat.items():
        print(f"time({b})/time({a}) = {v:.2f}")
    if any(r.mults > r.bound for r in rows):
        raise InvariantError("multiplication count above the quadratic bound")
    return EXIT_OK


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", default="gf2", help="gf2, gfp:<p> or q (default gf2)")
    common.add_argument("--seq", action="append", help="comma-separated terms, s_0 first")
    common.add_argument("--invform", help="'m=<int>; F=<F_m>,...,<F_0>'")
    common.add_argument("--file", help="one sequence or inverse form per line; '-' for stdin")
    common.add_argument("--json", action="store_true", help="JSON output")
    common.add_argument("--seed", type=int, default=0)

    parser = _Parser(prog="invgb", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("pair", parents=[common], help="viable pair of generators")
    p.add_argument("--trace", action="store_true", help="print every step")
    p.add_argument("--csv", action="store_true", help="trace as CSV")
    p.add_argument("--reduced", action="store_true", help="also print the reduced basis")
    p.set_defaults(run=cmd_pair)

    p = sub.add_parser("gb", parents=[common], help="minimal Groebner basis and degree vector")
    p.set_defaults(run=cmd_gb)
    p = sub.add_parser("rgb", parents=[common], help="reduced Groebner basis")
    p.set_defaults(run=cmd_rgb)

    p = sub.add_parser("lc", parents=[common], help="linear complexity")
    p.add_argument("--profile", action="store_true", help="complexity of every prefix")
    p.set_defaults(run=cmd_lc)

    p = sub.add_parser("intersect", parents=[common], help="intersect two annihilator ideals")
    p.set_defaults(run=cmd_intersect)

    p = sub.add_parser("verify", parents=[common], help="oracle agreement checks")
    p.add_argument("--scale", type=float, default=1.0, help="multiply the case counts")
    p.set_defaults(run=cmd_verify)

    p = sub.add_parser("bench", parents=[common], help="multiplication counts and timing")
    p.add_argument("--sizes", help="comma-separated lengths (default 1024,2048,4096)")
    p.add_argument("--repeats", type=int, default=15)
    p.set_defaults(run=cmd_bench)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.run(args)
    except (UsageError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InvariantError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except Exception as exc:  # anything else is a bug, not bad input
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    raise SystemExit(main())
