"""Command-line front end: ``semiderive <group> <command> [flags]``.

Exit codes: 0 success or pass, 1 a requested check failed or a witness was
found, 2 usage, input or IO error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from pathlib import Path

from . import jordan as J
from . import verifier as V
from .chain_core import SemiringError, format_rle, parse_rle
from .simplex import (
    enumerate_simplex,
    faces,
    format_type,
    idempotent_type_census,
    nilpotent_class,
    parse_simplex,
    parse_type,
    right_identities,
    right_identity_order,
    simplex_size,
    type_class,
    type_of,
)
from .toeplitz import (
    jordan_leibniz_scan,
    one_sided_inequality_scan,
    ordinary_leibniz_witness,
    semiring_from_selector,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _out(text: str) -> None:
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


# --- endo ---------------------------------------------------------------------------


def cmd_endo(args: argparse.Namespace) -> int:
    f = parse_rle(args.f, args.n)
    if args.command == "eval":
        if not 0 <= args.x < args.n:
            raise UsageError(f"--x must be in 0..{args.n - 1}")
        _out(str(f(args.x)))
        return EXIT_OK
    if args.g is None:
        raise UsageError(f"endo {args.command} needs --g")
    g = parse_rle(args.g, args.n)
    _out(format_rle(f + g if args.command == "add" else f * g))
    return EXIT_OK


# --- simplex ------------------------------------------------------------------------


def cmd_simplex(args: argparse.Namespace) -> int:
    spec = parse_simplex(args.simplex)
    if args.command == "list":
        members = type_class(spec, parse_type(args.type, spec.k)) if args.type else enumerate_simplex(spec)
        for e in members:
            _out(f"{format_rle(e)}\t{format_type(type_of(e, spec))}" if args.types else format_rle(e))
        return EXIT_OK
    if args.command == "faces":
        for fc in faces(spec):
            _out(f"{fc}\t{fc.kind}{'' if fc.proper else ' (whole)'}")
        return EXIT_OK
    kind = args.kind
    if kind == "size":
        got = len(enumerate_simplex(spec))
        _out(f"size {got} (formula {simplex_size(spec.n, spec.k)})")
    elif kind == "right-identities":
        cen = right_identities(spec)
        _out(f"right identities {cen.count} (formula {right_identity_order(spec)})")
        for e in cen.members:
            _out(format_rle(e))
    elif kind == "nilpotent":
        counts = [nilpotent_class(spec.k, lv).count for lv in range(spec.k)]
        _out(f"nilpotent counts by level (k={spec.k}): {' '.join(map(str, counts))}")
    elif kind == "idempotent":
        cen = idempotent_type_census(spec.k)
        for key, c in cen.items():
            _out(f"{key} {c.count}")
    return EXIT_OK


# --- tables -------------------------------------------------------------------------


def render_table(table: J.TypeTable, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(table.to_json()) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        labels = [format_type(t) for t in table.labels]
        w.writerow(["", *labels])
        for label, row in zip(labels, table.as_strings()):
            w.writerow([label, *row])
        return buf.getvalue()
    return table.render() + "\n"


def cmd_table(args: argparse.Namespace) -> int:
    table = J.type_mult_table() if args.kind == "mult" else J.type_jordan_table()
    sys.stdout.write(render_table(table, args.format))
    return EXIT_OK


# --- jordan -------------------------------------------------------------------------


def _domain(spec, text: str | None, alpha_type):
    if text is None or text == "all":
        return enumerate_simplex(spec)
    if text == "claimed":
        return J.claimed_closed_set(spec, alpha_type)
    if text.startswith("type:"):
        return type_class(spec, parse_type(text[5:], spec.k))
    raise UsageError(f"bad --domain {text!r}; use all, claimed or type:a,b,c")


def cmd_jordan(args: argparse.Namespace) -> int:
    if args.command == "table":
        return cmd_table(args)
    spec = parse_simplex(args.simplex)
    d = J.JordanMap(parse_rle(args.alpha, spec.n), spec)
    if args.command == "apply":
        if args.beta is None:
            raise UsageError("jordan apply needs --beta")
        _out(format_rle(d(parse_rle(args.beta, spec.n))))
        return EXIT_OK
    dom = _domain(spec, args.domain, type_of(d.alpha, spec))
    report = J.leibniz_scan(d, dom, max_witnesses=args.max_witnesses)
    _out(json.dumps({**report.to_dict(), "pairs_checked": report.pairs_checked,
                     "violations": report.violations}, indent=2))
    return EXIT_OK if report else EXIT_FAIL


# --- check --------------------------------------------------------------------------


def _print_claim(c: V.ClaimResult, as_json: bool) -> None:
    if as_json:
        _out(json.dumps(c.to_dict(), indent=2, sort_keys=True))
        return
    keys = ("type", "claimed_size", "alphas", "pairs_checked", "cells", "matched", "observed")
    extra = ", ".join(f"{k}={c.details[k]}" for k in keys if k in c.details)
    _out(f"{c.id} [{c.scope}]: {c.verdict}" + (f" ({extra})" if extra else ""))
    for w in c.witnesses[:3]:
        _out("  witness: " + json.dumps(w, sort_keys=True))


def _needs_simplex(args) -> object:
    if not args.simplex:
        raise UsageError(f"check {args.command} needs --simplex")
    return parse_simplex(args.simplex)


def cmd_check(args: argparse.Namespace) -> int:
    cmd = args.command
    results: list[V.ClaimResult] = []
    if cmd == "prop":
        spec = _needs_simplex(args)
        if args.id == 14 and args.level is None:
            levels = list(range(1, spec.k - 1))
            if not levels:
                raise V.IncompatibleSpec("proposition 14 needs k >= 3")
            results = [V.run_proposition(14, spec, lv) for lv in levels]
        else:
            results = [V.run_proposition(args.id, spec, args.level)]
    elif cmd == "lemma":
        spec = _needs_simplex(args)
        results = [V.lemma_claim(spec, f"lemma{args.id}")]
    elif cmd == "theorem":
        spec = _needs_simplex(args)
        if args.id == 2:
            results = [V.lift_claim(spec)]
        else:
            results = [V.theorem_claim(spec, f"thm{args.id}")]
            if args.id == 1 and str(spec) == str(V.TRIANGLE_EXAMPLE):
                results.append(V.noncommuting_claim())
    elif cmd == "example":
        results = [V.run_example(args.id)]
        if args.id == 2:
            results.append(V.example_commutation())
    elif cmd == "corollary":
        results = [V.corollary_claim()]
    for c in results:
        _print_claim(c, args.json)
    return EXIT_FAIL if any(c.verdict == "fail" for c in results) else EXIT_OK


# --- toeplitz -----------------------------------------------------------------------


def cmd_toeplitz(args: argparse.Namespace) -> int:
    S = semiring_from_selector(args.semiring)
    if args.n < 1:
        raise UsageError("--n must be >= 1")
    if args.command == "witness":
        w = ordinary_leibniz_witness(S, args.n)
        if w is None:
            _out(f"no witness: ordinary Leibniz rule holds on all triples ({S.name}, n={args.n})")
            return EXIT_OK
        _out(json.dumps(w, indent=2))
        return EXIT_FAIL
    if args.mode == "jordan":
        r = jordan_leibniz_scan(S, args.n, samples=args.samples, seed=args.seed)
        bad = r["failures"] > 0
    else:
        r = one_sided_inequality_scan(S, args.n, samples=args.samples, seed=args.seed)
        bad = not r["holds"]
    _out(json.dumps(r, indent=2))
    return EXIT_FAIL if bad else EXIT_OK


# --- report -------------------------------------------------------------------------


def emit_report(report: V.Report, fmt: str, path: Path | None) -> None:
    if fmt == "json":
        text = report.to_json()
    elif fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["id", "scope", "verdict", "witnesses"])
        for c in report.claims:
            w.writerow([c.id, c.scope, c.verdict, len(c.witnesses)])
        text = buf.getvalue()
    else:
        text = report.summary() + "\n"
    if path is None:
        sys.stdout.write(text)
    else:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text, encoding="utf-8")


def cmd_report(args: argparse.Namespace) -> int:
    cfg = V.ReportConfig(workers=args.parallel, seed=args.seed,
                         toeplitz=not args.no_toeplitz,
                         only=tuple(args.only) if args.only else None)
    report = V.full_report(cfg)
    if args.out == "-":
        path = None
    elif args.out:
        path = Path(args.out)
    else:
        path = Path(os.environ.get("SEMIDERIVE_OUT", ".")) / f"report.{args.format}"
    emit_report(report, args.format, path)
    if args.timings:
        tpath = Path(args.timings)
        tpath.parent.mkdir(parents=True, exist_ok=True)
        tpath.write_text(json.dumps(report.timings, indent=2) + "\n", encoding="utf-8")
    if path is not None:
        counts = {v: sum(c.verdict == v for c in report.claims) for v in ("pass", "fail", "reported")}
        print(f"wrote {path}: {len(report.claims)} claims, {counts['pass']} pass, "
              f"{counts['fail']} fail, {counts['reported']} reported", file=sys.stderr)
    return EXIT_OK if report.ok else EXIT_FAIL


# --- parser -------------------------------------------------------------------------


def _add_table_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--kind", choices=["mult", "jordan"], default="jordan")
    p.add_argument("--format", choices=["text", "json", "csv"], default="text")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="semiderive", description=__doc__.splitlines()[0])
    groups = parser.add_subparsers(dest="group", required=True)

    endo = groups.add_parser("endo", help="evaluate and combine endomorphisms of a chain")
    endo.add_argument("command", choices=["eval", "add", "mul"])
    endo.add_argument("--n", type=int, required=True, help="chain size")
    endo.add_argument("--f", required=True, help="run-length form, e.g. '1_5 5_2'")
    endo.add_argument("--g", help="second operand for add/mul")
    endo.add_argument("--x", type=int, default=0, help="point to evaluate at")
    endo.set_defaults(func=cmd_endo)

    sx = groups.add_parser("simplex", help="enumerate simplices, faces and censuses")
    sx.add_argument("command", choices=["list", "faces", "census"])
    sx.add_argument("--simplex", required=True, help="e.g. 'n=7;A=1,3,5'")
    sx.add_argument("--type", help="restrict list to one type, e.g. 'a,a,b'")
    sx.add_argument("--types", action="store_true", help="print the type next to each element")
    sx.add_argument("--kind", choices=["size", "right-identities", "nilpotent", "idempotent"],
                    default="size")
    sx.set_defaults(func=cmd_simplex)

    jd = groups.add_parser("jordan", help="Jordan maps d_alpha(beta) = alpha*beta + beta*alpha")
    jd.add_argument("command", choices=["apply", "table", "check"])
    jd.add_argument("--simplex")
    jd.add_argument("--alpha")
    jd.add_argument("--beta")
    jd.add_argument("--domain", help="all (default), claimed, or type:a,b,c")
    jd.add_argument("--max-witnesses", type=int, default=10)
    _add_table_flags(jd)
    jd.set_defaults(func=cmd_jordan)

    tb = groups.add_parser("table", help="type multiplication or Jordan table")
    _add_table_flags(tb)
    tb.set_defaults(func=cmd_table)

    ck = groups.add_parser("check", help="verify one claim")
    ck.add_argument("command", choices=["prop", "theorem", "lemma", "example", "corollary"])
    ck.add_argument("--id", type=int, default=1)
    ck.add_argument("--simplex")
    ck.add_argument("--level", type=int)
    ck.add_argument("--json", action="store_true", help="print the full claim record")
    ck.set_defaults(func=cmd_check)

    tp = groups.add_parser("toeplitz", help="upper-triangular Toeplitz matrices over a semiring")
    tp.add_argument("command", choices=["check", "witness"])
    tp.add_argument("--semiring", required=True, help="bool, maxplus:M or endo:m")
    tp.add_argument("--n", type=int, required=True, help="matrix size")
    tp.add_argument("--mode", choices=["jordan", "one-sided"], default="jordan")
    tp.add_argument("--samples", type=int, default=20000)
    tp.add_argument("--seed", type=int, default=0)
    tp.set_defaults(func=cmd_toeplitz)

    rp = groups.add_parser("report", help="run every claim and write a report")
    rp.add_argument("command", choices=["full"])
    rp.add_argument("--out", help="output file, '-' for stdout (default $SEMIDERIVE_OUT/report.<fmt>)")
    rp.add_argument("--format", choices=["json", "text", "csv"], default="json")
    rp.add_argument("--parallel", type=int, default=1, help="worker processes")
    rp.add_argument("--seed", type=int, default=0)
    rp.add_argument("--only", action="append", help="claim id to run (repeatable)")
    rp.add_argument("--no-toeplitz", action="store_true")
    rp.add_argument("--timings", help="write per-claim wall times to this JSON file")
    rp.set_defaults(func=cmd_report)
    return parser


def run_command(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if getattr(args, "parallel", 1) is not None and getattr(args, "parallel", 1) < 1:
        print("semiderive: --parallel must be >= 1", file=sys.stderr)
        return EXIT_USAGE
    if args.group == "jordan" and args.command != "table" and not (args.simplex and args.alpha):
        print("semiderive: jordan apply/check need --simplex and --alpha", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except (UsageError, SemiringError, OSError) as exc:
        print(f"semiderive: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run_command())


if __name__ == "__main__":
    main()
