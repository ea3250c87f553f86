"""Command-line interface.

Subcommands: charpoly, spectrum, fpdim, galkin, verify.  Exit codes: 0 on
success / all checks passing, 2 on usage errors, 3 on a verification
mismatch.  Output goes to stdout and, when --out is given, to that file as
well; JSON is the only format carrying full witness payloads.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import serialize, spectra, verifier
from .charpoly import charpoly_faddeev, closed_form_charpoly
from .ring import build_ap, make_context

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_MISMATCH = 3


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="oddquadric",
        description=(
            "Exact and numeric spectral analysis of the quantum multiplication "
            "operators of odd-dimensional quadrics at unit quantum parameter."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--format", choices=("json", "csv", "text"), default="text")
        sp.add_argument("--out", help="also write the output to this path")

    sp = sub.add_parser("charpoly", help="characteristic polynomial of one operator")
    sp.add_argument("-n", "--n", dest="n", type=int, required=True)
    sp.add_argument("-p", "--p", dest="p", type=int, required=True)
    common(sp)

    sp = sub.add_parser("spectrum", help="closed-form eigenvalues of one operator")
    sp.add_argument("-n", "--n", dest="n", type=int, required=True)
    sp.add_argument("-p", "--p", dest="p", type=int, required=True)
    common(sp)

    sp = sub.add_parser("fpdim", help="Frobenius-Perron dimension of one basis class")
    sp.add_argument("-n", "--n", dest="n", type=int, required=True)
    sp.add_argument("-p", "--p", dest="p", type=int, required=True)
    common(sp)

    sp = sub.add_parser("galkin", help="anticanonical lower-bound margins over a range of n")
    sp.add_argument("--n-min", type=int, required=True)
    sp.add_argument("--n-max", type=int, required=True)
    common(sp)

    sp = sub.add_parser("verify", help="run invariant checks over a range of n")
    sp.add_argument("--n-min", type=int, required=True)
    sp.add_argument("--n-max", type=int, required=True)
    sp.add_argument("--checks", help="comma-separated check ids (default: all)")
    sp.add_argument("--jobs", type=int, default=os.cpu_count() or 1)
    common(sp)

    return parser


def _context_or_exit(parser, n):
    try:
        return make_context(n)
    except ValueError as exc:
        parser.error(str(exc))


def _check_p(parser, ctx, p, minimum):
    if not minimum <= p <= ctx.dim:
        parser.error(f"p must be in [{minimum}, {ctx.dim}] for n={ctx.n}, got {p}")


def cmd_charpoly(args, parser) -> tuple[int, str]:
    ctx = _context_or_exit(parser, args.n)
    _check_p(parser, ctx, args.p, 0)
    computed = charpoly_faddeev(build_ap(ctx, args.p))
    closed = None if args.p == 0 else closed_form_charpoly(ctx, args.p)
    match = None if closed is None else computed == closed
    code = EXIT_OK if match in (None, True) else EXIT_MISMATCH

    if args.format == "json":
        result = {
            "n": ctx.n,
            "p": args.p,
            "computed": serialize.poly_json(computed),
            "closed_form": None if closed is None else serialize.poly_json(closed),
            "match": match,
        }
        out = serialize.dumps_canonical(
            serialize.envelope("charpoly", {"n": ctx.n, "p": args.p}, result)
        )
    elif args.format == "csv":
        rows = []
        for k, c in enumerate(computed.coeffs):
            closed_entry = "" if closed is None else serialize.frac_str(closed.coeffs[k])
            match_entry = "" if match is None else serialize.fmt_bool(match)
            rows.append([ctx.n, args.p, k, serialize.frac_str(c), closed_entry, match_entry])
        out = serialize.csv_string(
            ["n", "p", "coeff_index", "computed", "closed_form", "match"], rows
        )
    else:
        left = serialize.poly_text(computed)
        if closed is None:
            out = f"{left} | closed form: none (p=0)\n"
        else:
            out = (
                f"{left} | closed form: {serialize.poly_text(closed)}"
                f" | match: {serialize.fmt_bool(match)}\n"
            )
    return code, out


def cmd_spectrum(args, parser) -> tuple[int, str]:
    ctx = _context_or_exit(parser, args.n)
    _check_p(parser, ctx, args.p, 1)
    report = spectra.spectrum_report(ctx, args.p)

    if args.format == "json":
        out = serialize.dumps_canonical(
            serialize.envelope(
                "spectrum", {"n": ctx.n, "p": args.p}, serialize.spectrum_json(report)
            )
        )
    elif args.format == "csv":
        rows = [
            [
                ctx.n,
                args.p,
                serialize.fmt_float(serialize.round9(ep.value.real)),
                serialize.fmt_float(serialize.round9(ep.value.imag)),
                ep.multiplicity,
                serialize.fmt_float(report.fp_dim),
                serialize.fmt_bool(report.simple),
            ]
            for ep in report.eigenpairs
        ]
        out = serialize.csv_string(
            ["n", "p", "re", "im", "multiplicity", "fp_dim", "simple"], rows
        )
    else:
        eig = ", ".join(
            f"{serialize.fmt_complex(ep.value)} (x{ep.multiplicity})"
            for ep in report.eigenpairs
        )
        out = (
            f"n={ctx.n} p={args.p} | eigenvalues: {eig} | "
            f"FPdim: {serialize.fmt_float(report.fp_dim)} | "
            f"simple: {serialize.fmt_bool(report.simple)}\n"
        )
    return EXIT_OK, out


def cmd_fpdim(args, parser) -> tuple[int, str]:
    ctx = _context_or_exit(parser, args.n)
    _check_p(parser, ctx, args.p, 1)
    value = spectra.fp_dim(ctx, args.p)

    if args.format == "json":
        result = {"n": ctx.n, "p": args.p, "value": serialize.round9(value)}
        out = serialize.dumps_canonical(
            serialize.envelope("fpdim", {"n": ctx.n, "p": args.p}, result)
        )
    elif args.format == "csv":
        out = serialize.csv_string(
            ["n", "p", "value"], [[ctx.n, args.p, serialize.fmt_float(value)]]
        )
    else:
        out = f"FPdim(n={ctx.n}, p={args.p}) = {serialize.fmt_float(value)}\n"
    return EXIT_OK, out


def cmd_galkin(args, parser) -> tuple[int, str]:
    if not 2 <= args.n_min <= args.n_max:
        parser.error(f"need 2 <= n-min <= n-max, got [{args.n_min}, {args.n_max}]")
    results = [spectra.galkin_check(make_context(n)) for n in range(args.n_min, args.n_max + 1)]
    all_pass = all(r.passed for r in results)
    code = EXIT_OK if all_pass else EXIT_MISMATCH

    if args.format == "json":
        rows = [
            {
                "n": r.n,
                "fpdim_c1": serialize.round9(r.fpdim_c1),
                "bound": serialize.round9(r.bound),
                "margin": serialize.round9(r.margin),
                "pass": r.passed,
            }
            for r in results
        ]
        result = {
            "n_min": args.n_min,
            "n_max": args.n_max,
            "rows": rows,
            "all_pass": all_pass,
        }
        out = serialize.dumps_canonical(
            serialize.envelope("galkin", {"n_min": args.n_min, "n_max": args.n_max}, result)
        )
    elif args.format == "csv":
        rows = [
            [
                r.n,
                serialize.fmt_float(r.fpdim_c1),
                serialize.fmt_float(r.bound),
                serialize.fmt_float(r.margin),
                serialize.fmt_bool(r.passed),
            ]
            for r in results
        ]
        out = serialize.csv_string(["n", "fpdim_c1", "bound", "margin", "pass"], rows)
    else:
        lines = [
            f"n={r.n} fpdim_c1={serialize.fmt_float(r.fpdim_c1)} "
            f"bound={serialize.fmt_float(r.bound)} margin={serialize.fmt_float(r.margin)} "
            f"pass={serialize.fmt_bool(r.passed)}"
            for r in results
        ]
        lines.append(f"all pass: {serialize.fmt_bool(all_pass)}")
        out = "\n".join(lines) + "\n"
    return code, out


def cmd_verify(args, parser) -> tuple[int, str]:
    checks = None
    if args.checks:
        checks = [c.strip() for c in args.checks.split(",") if c.strip()]
    try:
        report = verifier.run_suite(args.n_min, args.n_max, checks=checks, jobs=args.jobs)
    except ValueError as exc:
        parser.error(str(exc))
    code = EXIT_OK if report.all_passed else EXIT_MISMATCH

    if args.format == "json":
        out = serialize.dumps_canonical(
            serialize.envelope(
                "verify",
                {
                    "n_min": args.n_min,
                    "n_max": args.n_max,
                    "checks": sorted(checks) if checks else sorted(verifier.CHECK_IDS),
                },
                serialize.report_json(report),
            )
        )
    elif args.format == "csv":
        rows = [[r.check_id, r.n, r.p, r.status, r.detail] for r in report.results]
        out = serialize.csv_string(["check_id", "n", "p", "status", "detail"], rows)
    else:
        lines = [
            f"{r.status} {r.check_id} n={r.n}" + (f" p={r.p}" if r.p >= 0 else "")
            for r in report.results
        ]
        for cid in sorted(report.summary):
            counts = report.summary[cid]
            lines.append(f"summary {cid}: {counts['pass']} pass, {counts['fail']} fail")
        lines.append("ALL PASS" if report.all_passed else "FAILURES PRESENT")
        out = "\n".join(lines) + "\n"
    return code, out


COMMANDS = {
    "charpoly": cmd_charpoly,
    "spectrum": cmd_spectrum,
    "fpdim": cmd_fpdim,
    "galkin": cmd_galkin,
    "verify": cmd_verify,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    code, out = COMMANDS[args.command](args, parser)
    sys.stdout.write(out)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
