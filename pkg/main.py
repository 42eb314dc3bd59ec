"""
Command-line entry point for the mapping class group toolkit.
Builds presentations, verifies them, abelianizes, solves for central
exponents and exports.

Usage:
    python main.py present --family genus2 --format json
    python main.py check-sp --family wajnryb --g 4 --r 1
    python main.py abelianize --family genus2 --add-relator "(c1 c2 c3)^4 c5^-2"
    python main.py check-rep --family wajnryb --g 3 --r 1 --matrices tests/fixtures/sp_assignment_w31.json
    python main.py solve-central --g 3 --sigma 6 --m 10 --mns 10
    python main.py export --family gervais --g 3 --r 2 --format xlsx --output output/gervais.xlsx
    python main.py relators --g 3 --r 1
"""

import os
import sys
import json
import argparse
import logging

import config
import exporter
from central import Factorization, solve_from_counts
from errors import (
    ConstantsCorruptedError,
    NonIntegralSolutionError,
    ParseError,
    ToolkitError,
)
from intmat import abelianize
from presentations import builder_for, relator_library
from processor import Relator
from symplectic import fault_override, load_assignment, verify_presentation_sp, verify_projective_rep

logger = logging.getLogger("Toolkit")


# ─── Logging Setup ───────────────────────────────────────────────────

def setup_logging(verbose: int = 0, log_file: str = None):
    """Diagnostics go to stderr (and optionally a file); reports go to stdout."""
    level = logging.WARNING
    if verbose == 1:
        level = logging.INFO
    elif verbose >= 2:
        level = logging.DEBUG

    handlers = [logging.StreamHandler(sys.stderr)]
    if log_file:
        handlers.append(logging.FileHandler(log_file, encoding="utf-8"))

    logging.basicConfig(
        level=level,
        format=config.LOG_FORMAT,
        datefmt=config.LOG_DATE_FORMAT,
        handlers=handlers,
        force=True,
    )


# ─── Argument Parsing ────────────────────────────────────────────────

def _add_family_args(parser: argparse.ArgumentParser):
    parser.add_argument("--family", required=True, choices=sorted(config.FAMILY_ALIASES))
    parser.add_argument("--g", type=int, default=None, help="genus")
    parser.add_argument("--r", type=int, default=None, help="boundary components (wajnryb/gervais default 1)")
    parser.add_argument("--b3-variant", default=config.DEFAULT_B3_VARIANT, choices=sorted(config.B3_CONJUGATORS))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mcg-toolkit",
        description="Presentations of centrally extended mapping class groups",
    )
    parser.add_argument("-v", "--verbose", action="count", default=0, help="-v info, -vv debug")
    parser.add_argument("--log-file", default=None, help="also write diagnostics to this file")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("present", help="emit a presentation")
    _add_family_args(p)
    p.add_argument("--format", default="text", choices=["json", "text", "cas"])
    p.add_argument("--cas-dialect", default=config.DEFAULT_CAS_DIALECT, choices=list(config.CAS_DIALECTS))
    p.add_argument("--output", default=None)

    p = sub.add_parser("abelianize", help="abelian invariants of a presentation")
    _add_family_args(p)
    p.add_argument("--add-relator", action="append", default=[], metavar="WORD",
                   help="extra relator in text notation (repeatable)")
    p.add_argument("--quotient-mu", action="store_true", help="kill the central generator first")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("check-sp", help="verify every relator in Sp(2g, Z)")
    _add_family_args(p)
    p.add_argument("--json", action="store_true")
    p.add_argument("--inject-fault", action="store_true", help=argparse.SUPPRESS)

    p = sub.add_parser("check-rep", help="check a matrix assignment projectively")
    _add_family_args(p)
    p.add_argument("--matrices", required=True, help="assignment JSON file")
    p.add_argument("--strict", action="store_true", help="require every scalar to be 1")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("solve-central", help="kappa_chain / kappa_lantern exponents")
    p.add_argument("--g", type=int, default=None)
    p.add_argument("--sigma", type=int, default=None)
    p.add_argument("--m", type=int, default=None)
    p.add_argument("--mns", type=int, default=None)
    p.add_argument("--factorization", default=None, help="factorization JSON file")
    p.add_argument("--compat", action="store_true", help="use the printed closed forms")

    p = sub.add_parser("export", help="write a presentation to a file")
    _add_family_args(p)
    p.add_argument("--format", default="json", choices=["json", "text", "gap", "magma", "csv", "xlsx"])
    p.add_argument("--output", default=None)

    p = sub.add_parser("relators", help="print the relator library")
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--r", type=int, default=None)
    p.add_argument("--b3-variant", default=config.DEFAULT_B3_VARIANT, choices=sorted(config.B3_CONJUGATORS))
    p.add_argument("--json", action="store_true")

    return parser


# ─── Commands ────────────────────────────────────────────────────────

def _presentation(args, inject_fault: bool = False):
    builder = builder_for(args.family, args.g, args.r, b3_variant=args.b3_variant)
    if inject_fault:
        overrides = fault_override(builder)
        builder = builder_for(args.family, args.g, args.r, b3_variant=args.b3_variant, table_overrides=overrides)
    return builder.build()


def _emit(text: str, output: str = None):
    if output:
        exporter.write_text(text, output)
    else:
        sys.stdout.write(text)


def cmd_present(args) -> int:
    p = _presentation(args)
    _emit(exporter.render_presentation(p, args.format, args.cas_dialect), args.output)
    return config.EXIT_OK


def cmd_abelianize(args) -> int:
    p = _presentation(args)
    if args.quotient_mu:
        p = p.quotient()
    if args.add_relator:
        extra = [Relator(f"extra[{i}]", p.alphabet.parse(text)) for i, text in enumerate(args.add_relator, 1)]
        p = p.with_relators(extra)

    result = abelianize(p)
    if args.json:
        sys.stdout.write(exporter.to_json_text(result.to_dict()))
    else:
        print(result)
    return config.EXIT_OK


def cmd_check_sp(args) -> int:
    p = _presentation(args, inject_fault=args.inject_fault)
    report = verify_presentation_sp(p)

    if args.json:
        sys.stdout.write(exporter.to_json_text(report.to_dict()))
    elif report.passed:
        print(f"PASS {p.family} (g={p.g}, r={p.r}): {len(report.results)} relators map to the identity in Sp({2 * p.g}, Z)")
    else:
        print(f"FAIL {p.family} (g={p.g}, r={p.r}): {len(report.failures)} of {len(report.results)} relators fail")
        for label in report.failures:
            print(f"  {label}")
    return config.EXIT_OK if report.passed else config.EXIT_FAILURE


def cmd_check_rep(args) -> int:
    p = _presentation(args)
    assignment = load_assignment(args.matrices)
    extra = sorted(set(assignment) - set(p.generators))
    if extra:
        logger.warning(f"⚠️ Ignoring matrices for unknown generators: {', '.join(extra)}")

    report = verify_projective_rep(p, assignment)
    if args.json:
        sys.stdout.write(exporter.to_json_text(report.to_dict()))
    else:
        for result in report.results:
            if result.is_scalar:
                print(f"{result.label}: scalar {result.scalar}")
            else:
                print(f"{result.label}: not scalar (deviation {result.deviation})")

    ok = report.linear if args.strict else report.projective
    return config.EXIT_OK if ok else config.EXIT_FAILURE


def cmd_solve_central(args) -> int:
    if args.factorization:
        f = Factorization.load(args.factorization)
        g, sigma, m, m_ns = f.g, f.sigma, f.m, f.m_ns
    else:
        missing = [flag for flag, value in (("--g", args.g), ("--sigma", args.sigma), ("--m", args.m), ("--mns", args.mns))
                   if value is None]
        if missing:
            raise ParseError(f"solve-central needs --factorization or {', '.join(missing)}")
        g, sigma, m, m_ns = args.g, args.sigma, args.m, args.mns

    try:
        result = solve_from_counts(g, sigma, m, m_ns, compat=args.compat)
    except NonIntegralSolutionError as e:
        logger.error(f"❌ {e}")
        sys.stdout.write(exporter.to_json_text({"error": e.code}))
        return config.EXIT_FAILURE

    sys.stdout.write(exporter.to_json_text(result.to_dict()))
    return config.EXIT_OK


def _default_export_path(p, fmt: str) -> str:
    ext = {"text": "txt", "gap": "g", "magma": "m"}.get(fmt, fmt)
    return os.path.join(config.OUTPUT_DIR, f"{p.family}-g{p.g}-r{p.r}.{ext}")


def cmd_export(args) -> int:
    p = _presentation(args)
    path = args.output or _default_export_path(p, args.format)
    if args.format == "csv":
        exporter.export_to_csv(exporter.relator_table(p), path)
    elif args.format == "xlsx":
        exporter.export_to_excel(exporter.relator_table(p), path)
    else:
        exporter.write_text(exporter.render_presentation(p, args.format), path)
    print(path)
    return config.EXIT_OK


def cmd_relators(args) -> int:
    library = relator_library(args.g, args.r, b3_variant=args.b3_variant)
    if args.json:
        sys.stdout.write(exporter.to_json_text({name: word.to_json() for name, word in library.items()}))
    else:
        for name, word in library.items():
            print(f"{name}: {word}")
    return config.EXIT_OK


COMMANDS = {
    "present": cmd_present,
    "abelianize": cmd_abelianize,
    "check-sp": cmd_check_sp,
    "check-rep": cmd_check_rep,
    "solve-central": cmd_solve_central,
    "export": cmd_export,
    "relators": cmd_relators,
}


def main(argv=None) -> int:
    """Run one command and return its exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else config.EXIT_USAGE

    setup_logging(args.verbose, args.log_file)

    try:
        return COMMANDS[args.command](args)
    except (NonIntegralSolutionError, ConstantsCorruptedError) as e:
        logger.error(f"❌ {e.code}: {e}")
        return config.EXIT_FAILURE
    except ToolkitError as e:
        logger.error(f"❌ {e.code}: {e}")
        return config.EXIT_USAGE
    except (OSError, json.JSONDecodeError) as e:
        logger.error(f"❌ {e}")
        return config.EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
