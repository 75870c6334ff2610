"""Command-line front end: ``detlab <subcommand> ...``.

Exit status: 0 on success, 1 when a verification fails (algorithm
disagreement, or a positivity violation / fuzz disagreement under
``--strict``), 2 on usage, input or I/O errors.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import casorati, difftest
from .det import ALGORITHMS, COFACTOR_MAX_N, DetAlgorithm
from .errors import CorpusWriteFailure, DetlabError, InternalDisagreement
from .fixture import REFERENCE_RENDERING, paper_fixture
from .gen import GENERATOR_ID, GenConfig, compose_big_matrix, generate
from .matrix import allow_long_int_strings, digit_count, read_matrix, render_sci, write_matrix
from .orthopoly import read_measure

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

# values with at most this many digits are printed in full by default
_SHORT_DIGITS = 15


class UsageError(Exception):
    pass


def _int_pair(text: str) -> tuple[int, int]:
    try:
        lo, hi = text.split(":")
        return int(lo), int(hi)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected LO:HI, got {text!r}") from None


def _int_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _u64(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        value = -1
    if not 0 <= value < 1 << 64:
        raise argparse.ArgumentTypeError(f"seed must be an unsigned 64-bit integer, got {text!r}")
    return value


def _nonneg(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        value = -1
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {text!r}")
    return value


def _positive(text: str) -> int:
    value = _nonneg(text)
    if value == 0:
        raise argparse.ArgumentTypeError("expected a positive integer")
    return value


def _show(value: int, exact: bool) -> list[str]:
    digits = digit_count(value)
    shown = str(value) if exact or digits <= _SHORT_DIGITS else render_sci(value)
    return [shown, f"digits: {digits}"]


def _emit(lines: list[str]) -> None:
    sys.stdout.write("\n".join(lines) + "\n")


def _write_text(path: str, text: str) -> None:
    Path(path).write_text(text, encoding="utf-8")


# --- subcommands -------------------------------------------------------------


def cmd_det(args: argparse.Namespace) -> int:
    m = read_matrix(args.inp)
    if args.algo == "all":
        algos = list(DetAlgorithm)
        if m.rows > COFACTOR_MAX_N:
            algos.remove(DetAlgorithm.COFACTOR)
            print(f"note: cofactor skipped for n={m.rows} > {COFACTOR_MAX_N}", file=sys.stderr)
    else:
        algos = [DetAlgorithm(args.algo)]
    verdict = difftest.cross_check(m, algos)
    if verdict.agreement:
        lines = _show(verdict.value, args.exact)
        if len(algos) > 1:
            lines.append("agreement: true")
        _emit(lines)
        return EXIT_OK
    lines = ["agreement: false"]
    lines += [f"{name}: {v if args.exact else render_sci(v)}" for name, v in verdict.values.items()]
    _emit(lines)
    return EXIT_FAIL


def cmd_gen(args: argparse.Namespace) -> int:
    n = args.n
    exponents = tuple(args.exponents) if args.exponents else ()
    if exponents and n is None:
        n = len(exponents)
    config = GenConfig(
        seed=args.seed,
        n=14 if n is None else n,
        basic_range=args.basic_range,
        small_range=args.small_range,
        exponents=exponents,
    )
    _, _, big = generate(config)
    write_matrix(big, args.out)
    _emit([
        f"generator_id: {GENERATOR_ID}",
        f"seed: {config.seed}",
        f"n: {config.n}",
        f"exponents: {','.join(map(str, config.exponents))}",
        f"wrote: {args.out}",
    ])
    return EXIT_OK


def cmd_repro(args: argparse.Namespace) -> int:
    basic, exponents, small = paper_fixture()
    big = compose_big_matrix(basic, exponents, small)
    verdict = difftest.cross_check(big, [DetAlgorithm.BAREISS, DetAlgorithm.MODULAR])
    if not verdict.agreement:
        _emit(["agreement: false"] + [f"{k}: {render_sci(v)}" for k, v in verdict.values.items()])
        return EXIT_FAIL
    value = verdict.value
    matches = render_sci(value) == REFERENCE_RENDERING
    lines = _show(value, args.exact)
    if args.exact:
        lines.insert(1, f"rendered: {render_sci(value)}")
    lines += [
        "agreement: true (bareiss, modular)",
        f"reference: {REFERENCE_RENDERING} ({'match' if matches else 'MISMATCH'})",
    ]
    _emit(lines)
    return EXIT_OK if matches else EXIT_FAIL


def cmd_fuzz(args: argparse.Namespace) -> int:
    config = GenConfig(seed=args.seed)
    corpus = Path(args.corpus)
    try:
        corpus.mkdir(parents=True, exist_ok=True)
        report = difftest.fuzz_run(config, args.iters, corpus, jobs=args.jobs)
    except CorpusWriteFailure as exc:
        partial = getattr(exc, "partial_report", None)
        if partial is not None:
            sys.stdout.write(partial.dumps())
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    text = report.dumps()
    sys.stdout.write(text)
    _write_text(str(corpus / "fuzz-report.json"), text)
    if report.disagreements and args.strict:
        return EXIT_FAIL
    return EXIT_OK


def _scan_output(report: casorati.ScanReport, path: str | None) -> None:
    low = report.min_value
    lines = [
        f"cells: {len(report.cells)}",
        f"min: {'n/a' if low is None else render_sci(low)}",
        f"violations: {len(report.violations)}",
    ]
    for cell in report.violations:
        kind = "zero" if cell.value == 0 else "negative"
        lines.append(f"  n={cell.n} k={cell.k} F={list(cell.indices)}: {render_sci(cell.value)} ({kind})")
    if report.cells:
        lines.append(report.sign_table())
    _emit(lines)
    if path:
        _write_text(path, report.dumps())


def cmd_ks_scan(args: argparse.Namespace) -> int:
    mu = read_measure(args.measure)
    report = casorati.ks_scan(mu, args.l, args.nmax, args.kmax, jobs=args.jobs)
    _scan_output(report, args.report)
    return EXIT_FAIL if args.strict and report.violations else EXIT_OK


def cmd_fscan(args: argparse.Namespace) -> int:
    mu = read_measure(args.measure)
    try:
        f = casorati.IndexSet(tuple(args.indices))
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    report = casorati.general_scan(mu, f, args.kmax)
    _scan_output(report, args.report)
    return EXIT_OK


def cmd_export(args: argparse.Namespace) -> int:
    m = read_matrix(args.inp)
    text = difftest.export_cas(m, difftest.CasDialect(args.dialect)) + "\n"
    if args.out:
        _write_text(args.out, text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="detlab", description="Exact big-integer determinant laboratory.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("det", help="determinant of a matrix file")
    p.add_argument("--in", dest="inp", required=True, metavar="FILE")
    p.add_argument("--algo", choices=[a.value for a in ALGORITHMS] + ["all"], default="bareiss")
    p.add_argument("--exact", action="store_true", help="print every digit")
    p.set_defaults(func=cmd_det)

    p = sub.add_parser("gen", help="generate a seeded big-integer matrix")
    p.add_argument("--seed", type=_u64, required=True)
    p.add_argument("--n", type=_positive)
    p.add_argument("--basic-range", type=_int_pair, default=(-99, 99), metavar="LO:HI")
    p.add_argument("--small-range", type=_int_pair, default=(-999, 999), metavar="LO:HI")
    p.add_argument("--exponents", type=_int_list, metavar="E1,E2,...")
    p.add_argument("--out", required=True, metavar="FILE")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("repro", help="determinant of the built-in 14x14 reference matrix")
    p.add_argument("--exact", action="store_true")
    p.set_defaults(func=cmd_repro)

    p = sub.add_parser("fuzz", help="seeded differential fuzzing")
    p.add_argument("--seed", type=_u64, required=True)
    p.add_argument("--iters", type=_positive, required=True)
    p.add_argument("--jobs", type=_positive, default=1)
    p.add_argument("--corpus", required=True, metavar="DIR")
    p.add_argument("--strict", action="store_true")
    p.set_defaults(func=cmd_fuzz)

    p = sub.add_parser("ks-scan", help="consecutive-index Casorati positivity scan")
    p.add_argument("--measure", required=True, metavar="FILE")
    p.add_argument("--l", type=_positive, required=True)
    p.add_argument("--nmax", type=_nonneg, required=True)
    p.add_argument("--kmax", type=_nonneg, required=True)
    p.add_argument("--jobs", type=_positive, default=1)
    p.add_argument("--strict", action="store_true")
    p.add_argument("--report", metavar="FILE")
    p.set_defaults(func=cmd_ks_scan)

    p = sub.add_parser("fscan", help="Casorati scan for an arbitrary index set")
    p.add_argument("--measure", required=True, metavar="FILE")
    p.add_argument("--indices", type=_int_list, required=True, metavar="F1,F2,...")
    p.add_argument("--kmax", type=_nonneg, required=True)
    p.add_argument("--report", metavar="FILE")
    p.set_defaults(func=cmd_fscan)

    p = sub.add_parser("export", help="determinant expression for an external CAS")
    p.add_argument("--in", dest="inp", required=True, metavar="FILE")
    p.add_argument("--dialect", choices=[d.value for d in difftest.CasDialect], required=True)
    p.add_argument("--out", metavar="FILE")
    p.set_defaults(func=cmd_export)

    return parser


def run(argv: list[str] | None = None) -> int:
    allow_long_int_strings()
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    try:
        return args.func(args)
    except InternalDisagreement as exc:
        print(f"verification failure: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except (OSError, DetlabError, UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())
