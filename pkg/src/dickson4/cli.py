"""Command-line entry point: ``dickson4 {eval,coeffs,scan,moments,verify}``.

Exit status: 0 on success, 1 on usage or configuration errors, 2 when an
internal consistency check fails.
"""

from __future__ import annotations

import argparse
import contextlib
import json
import sys

from .checks import CHECKS, run_checks
from .dickson import rdp4_eval_closed, rdp4_eval_recursive, rdp_coeffs_exact, rdp_eval_param
from .errors import CriterionDisagreement, DicksonError, IndexCoverageError, InternalInconsistency
from .field import GF, _as_int, construct_field
from .moments import CORRECTED, first_moments_bruteforce, moment_table
from .output import FORMATS, emit
from .permutation import PPReport, aux_poly, pp_scan

EXIT_OK, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def parse_element(F: GF, text: str) -> int:
    """"3", "-2" (prime-field residues) or "[2,3]" / "2,3" (coefficient vectors)."""
    s = text.strip()
    if s.startswith("[") and s.endswith("]"):
        s = s[1:-1]
    parts = [t for t in s.split(",") if t.strip()]
    if not parts:
        raise UsageError(f"empty field element {text!r}")
    try:
        values = [_as_int(t) for t in parts]
    except (TypeError, ValueError) as exc:
        raise UsageError(f"bad field element {text!r}: {exc}") from None
    if len(values) == 1:
        return F.from_int(values[0])
    if len(values) > F.e:
        raise UsageError(f"{text!r} has more than e={F.e} coefficients")
    return F.from_coeffs(values)


def _field_from_args(args) -> GF:
    if args.p is None:
        raise UsageError("--p is required")
    modulus = None
    if args.modulus:
        modulus = [c for c in args.modulus.replace("[", "").replace("]", "").split(",") if c.strip()]
    return construct_field(args.p, args.e, modulus)


def _add_field_flags(sp, required=True):
    sp.add_argument("--p", type=int, required=required, help="characteristic (prime > 3)")
    sp.add_argument("--e", type=int, default=1, help="extension degree (default 1)")
    sp.add_argument("--modulus", help="monic modulus, comma-separated residues, constant first")


def _add_output_flags(sp):
    sp.add_argument("--format", choices=FORMATS, default="csv")
    sp.add_argument("--out", help="output file (default: standard output)")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="dickson4", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    sp = sub.add_parser("eval", help="evaluate D_{n,3}(a, x)")
    _add_field_flags(sp)
    sp.add_argument("--n", required=True, help="degree (decimal, any size)")
    sp.add_argument("--x", required=True, help="field element")
    sp.add_argument("--a", help="parameter a (default 1)")
    sp.add_argument("--method", choices=("recursive", "closed"), default="recursive")

    sp = sub.add_parser("coeffs", help="exact coefficients of D_{n,k}(1, x) or f_n")
    _add_field_flags(sp, required=False)
    sp.add_argument("--n", required=True)
    sp.add_argument("--kind", type=int, default=3, help="k in 0..3 (k = 3 is the fourth kind)")
    sp.add_argument("--aux", action="store_true", help="auxiliary polynomial f_n instead")
    sp.add_argument("--format", choices=("text", "json"), default="text")
    sp.add_argument("--out")

    sp = sub.add_parser("scan", help="run every permutation criterion over a range of n")
    _add_field_flags(sp)
    sp.add_argument("--n-min", default="0")
    sp.add_argument("--n-max", required=True)
    _add_output_flags(sp)

    sp = sub.add_parser("moments", help="first moments by recurrence, checked by brute force")
    _add_field_flags(sp)
    sp.add_argument("--convention", choices=("corrected", "as-printed"), default="corrected")
    sp.add_argument("--emit", choices=("table", "divergences"), default="table")
    _add_output_flags(sp)

    sp = sub.add_parser("verify", help="run the property suite for one field")
    _add_field_flags(sp)
    sp.add_argument("--n-max", default="300")
    sp.add_argument("--only", action="append", choices=[c.name for c in CHECKS])
    _add_output_flags(sp)
    return parser


@contextlib.contextmanager
def _sink(path):
    if path:
        with open(path, "w", newline="") as fh:
            yield fh
    else:
        yield sys.stdout


def _cmd_eval(args) -> int:
    F = _field_from_args(args)
    n = _as_int(args.n)
    if n < 0:
        raise UsageError("--n must be nonnegative")
    x = parse_element(F, args.x)
    if args.a is not None:
        value = rdp_eval_param(F, n, parse_element(F, args.a), x)
    elif args.method == "closed":
        value = rdp4_eval_closed(F, n, x)
    else:
        value = rdp4_eval_recursive(F, n, x)
    print(F.fmt(value))
    return EXIT_OK


def _cmd_coeffs(args) -> int:
    n = _as_int(args.n)
    coeffs = list(aux_poly(n).coeffs) if args.aux else rdp_coeffs_exact(n, args.kind)
    F = _field_from_args(args) if args.p is not None else None
    if F is not None:
        coeffs = [c % F.p for c in coeffs]
    with _sink(args.out) as out:
        if args.format == "json":
            doc = {"n": n}
            if args.aux:
                doc["poly"] = "aux"
            else:
                doc["kind"] = args.kind
            if F is None:
                doc.update(ring="Z", coeffs=[str(c) for c in coeffs])
            else:
                doc.update(ring="Fp", p=F.p, coeffs=coeffs)
            out.write(json.dumps(doc, separators=(",", ":")) + "\n")
        else:
            out.write("[" + ",".join(map(str, coeffs)) + "]\n")
    return EXIT_OK


def _cmd_scan(args) -> int:
    F = _field_from_args(args)
    reports = pp_scan(F, args.n_min, args.n_max)
    with _sink(args.out) as out:
        emit((r.as_record() for r in reports), PPReport.FIELDS, args.format, out, F.describe())
    return EXIT_OK


def _cmd_moments(args) -> int:
    F = _field_from_args(args)
    convention = args.convention.replace("-", "_")
    table = moment_table(F, convention)
    top = F.q**2 - 1
    oracle = first_moments_bruteforce(F, top)
    mismatches = [n for n in range(1, top + 1) if table.a[n] != oracle[n]]
    with _sink(args.out) as out:
        if args.emit == "table":
            fields = ("n", "a_n", "d_n", "oracle", "match")
            records = (
                {"n": n, "a_n": table.a[n], "d_n": table.d[n], "oracle": oracle[n],
                 "match": table.a[n] == oracle[n]}
                for n in range(1, top + 1)
            )
        else:
            fields = ("n", "recurrence", "oracle", "difference")
            records = (
                {"n": n, "recurrence": table.a[n], "oracle": oracle[n],
                 "difference": (table.a[n] - oracle[n]) % F.p}
                for n in mismatches
            )
        emit(records, fields, args.format, out, f"{F.describe()},convention={convention}")
    if convention == CORRECTED and mismatches:
        print(f"corrected recurrence disagrees with brute force at n={mismatches[:10]}", file=sys.stderr)
        return EXIT_INTERNAL
    return EXIT_OK


def _cmd_verify(args) -> int:
    F = _field_from_args(args)
    n_max = _as_int(args.n_max)
    records, failed = [], None
    for check, err in run_checks(F, n_max, only=args.only):
        records.append({
            "property": check.name,
            "status": "fail" if err else "pass",
            "detail": str(err) if err else check.description,
        })
        if err:
            failed = check
    with _sink(args.out) as out:
        emit(records, ("property", "status", "detail"), args.format, out, F.describe())
    if failed is not None:
        mod = ",".join(map(str, F.modulus))
        print(
            f"FAIL {failed.name}; reproduce with: dickson4 verify --p {F.p} --e {F.e} "
            f"--modulus {mod} --n-max {n_max} --only {failed.name}",
            file=sys.stderr,
        )
        return EXIT_INTERNAL
    return EXIT_OK


COMMANDS = {
    "eval": _cmd_eval,
    "coeffs": _cmd_coeffs,
    "scan": _cmd_scan,
    "moments": _cmd_moments,
    "verify": _cmd_verify,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except (CriterionDisagreement, IndexCoverageError, InternalInconsistency) as exc:
        print(f"dickson4: internal consistency failure: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except (UsageError, DicksonError, ValueError, TypeError) as exc:
        print(f"dickson4: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"dickson4: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
