#!/usr/bin/env python3
"""
Verification runner.

Parses the command line, configures logging, dispatches the selected suites
concurrently and writes the report. Exit status is 0 when no check fails,
1 when any check fails and 2 for usage or configuration errors.
"""

import argparse
import json
import logging
import logging.handlers
import os
import stat
import sys
from collections.abc import Callable, Sequence
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path
from typing import Any, Optional

from .components import (
    CheckRecord,
    ConfigError,
    ErrorMessages,
    JordanField,
    LandauFrame,
    VerificationError,
    algebra_checks,
    emit_report,
    exit_status,
    hydrogen,
    jordan,
    landau,
    make_record,
    spinor,
    tkk,
    transforms,
)
from .components.lie import WEYL_OPS, structure_constants
from .components.report_renderer import RICH_AVAILABLE, build_table, summarize
from .verify_config import (
    KS_MODES,
    LC_MOMENTA_MODES,
    OUTPUT_FORMATS,
    SUITE_NAMES,
    SuiteConfig,
    VerifyConfig,
    get_config,
)

if RICH_AVAILABLE:
    from rich.console import Console

logger = logging.getLogger("dirac_landau_verify")

SuiteRunner = Callable[[SuiteConfig], list[CheckRecord]]

SUITES: dict[str, SuiteRunner] = {
    "weyl": algebra_checks.run_checks,
    "landau": landau.run_checks,
    "jordan": jordan.run_checks,
    "tkk": tkk.run_checks,
    "hydrogen": hydrogen.run_checks,
    "spinor": spinor.run_checks,
    "transforms": transforms.run_checks,
}

VERIFY_TARGETS = ("all", *SUITE_NAMES, "so23")
DUMP_TARGETS = ("sigma", "generators", "structure-constants")

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


def setup_logging(run_name: str, log_dir: Path, verbose: bool = False) -> bool:
    """
    Setup logging with a per-run filename, rotation, and secure permissions.

    Log files are stored in ``log_dir`` with:
    - Rotating file handler (max 10MB per file, 5 backup files)
    - Restrictive permissions (0600 - owner read/write only)
    - UTF-8 encoding

    Args:
        run_name: Name used for the log file
        log_dir: Directory for log files
        verbose: Show INFO messages on the console instead of errors only

    Returns:
        True if logging was successfully configured, False otherwise
    """
    console_level = logging.INFO if verbose else logging.ERROR
    try:
        log_dir.mkdir(parents=True, exist_ok=True, mode=0o700)

        safe_name = run_name.lower().replace(" ", "_").replace("/", "_")
        log_file = log_dir / f"{safe_name}.log"

        logger.setLevel(logging.DEBUG if verbose else logging.INFO)
        logger.handlers = []

        handler = logging.handlers.RotatingFileHandler(
            log_file,
            maxBytes=10 * 1024 * 1024,  # 10 MB
            backupCount=5,
            encoding="utf-8",
        )
        handler.setFormatter(
            logging.Formatter("%(asctime)s - %(name)s - %(levelname)s - %(message)s")
        )
        logger.addHandler(handler)

        if log_file.exists():
            os.chmod(log_file, stat.S_IRUSR | stat.S_IWUSR)  # 0600

        console_handler = logging.StreamHandler(sys.stderr)
        console_handler.setLevel(console_level)
        console_handler.setFormatter(logging.Formatter("%(levelname)s: %(message)s"))
        logger.addHandler(console_handler)

        logger.info(f"Logging initialized for run: {run_name}")
        logger.info(f"Log file: {log_file}")
        return True

    except Exception as e:
        print(f"Warning: Could not setup logging: {e}", file=sys.stderr)
        logger.setLevel(logging.INFO if verbose else logging.WARNING)
        logger.handlers = []
        console_handler = logging.StreamHandler(sys.stderr)
        console_handler.setFormatter(logging.Formatter("%(levelname)s: %(message)s"))
        logger.addHandler(console_handler)
        return False


def _suite_error(name: str, error: Exception) -> CheckRecord:
    print(ErrorMessages.unexpected_error(f"suite {name}", error), file=sys.stderr)
    return make_record(
        f"{name}.suite-error",
        f"suite {name} ran to completion",
        False,
        residual=float("inf"),
        notes={"error": f"{type(error).__name__}: {error}"},
    )


def _run_one(
    name: str, runner: SuiteRunner, settings: SuiteConfig
) -> list[CheckRecord]:
    logger.info(f"Running suite {name}")
    try:
        records = runner(settings)
    except VerificationError as e:
        logger.exception(f"Suite {name} stopped")
        return [_suite_error(name, e)]
    except Exception as e:
        logger.exception(f"Suite {name} raised unexpectedly")
        return [_suite_error(name, e)]
    failed = sum(1 for r in records if r.failed)
    logger.info(f"Suite {name}: {len(records)} checks, {failed} failed")
    return records


def run_suite(
    settings: SuiteConfig, runners: Optional[dict[str, SuiteRunner]] = None
) -> tuple[list[CheckRecord], int]:
    """
    Run the selected suites concurrently.

    Args:
        settings: Validated suite settings (``settings.suites`` selects suites)
        runners: Suite table, defaults to ``SUITES``

    Returns:
        Records sorted by id and the process exit status
    """
    runners = runners or SUITES
    selected = [(name, runners[name]) for name in settings.suites]
    with ThreadPoolExecutor(max_workers=settings.workers) as pool:
        futures = [
            pool.submit(_run_one, name, runner, settings) for name, runner in selected
        ]
        records = [record for future in futures for record in future.result()]
    records.sort(key=lambda r: r.id)
    return records, exit_status(records)


def run_so23(presentation: str) -> tuple[list[CheckRecord], int]:
    """The 45 brackets of one presentation."""
    records = landau.verify_so23(landau.dirac_generators(presentation))
    records.sort(key=lambda r: r.id)
    return records, exit_status(records)


def dump_payload(target: str) -> dict[str, Any]:
    """JSON payload for the ``dump`` subcommand."""
    if target == "sigma":
        return spinor.sigma_json()
    if target == "generators":
        return {
            "landau": {
                p: landau.dirac_generators(p).to_json() for p in landau.PRESENTATIONS
            },
            "tkk": {f.value: tkk.generator_table_json(f) for f in JordanField},
            "hydrogen": hydrogen.generator_table_json(),
        }
    oscillator = landau.dirac_generators("oscillator")
    labels = list(oscillator.labelled())
    so23 = structure_constants(list(oscillator.elements.values()), labels, WEYL_OPS)
    return {
        "jordan": {
            f.value: jordan.structure_constants(f).computed.to_json()
            for f in JordanField
        },
        "so23": so23.to_json(),
    }


def spectrum_payload(cutoff: int, frame: LandauFrame, tolerance: float) -> dict:
    levels = landau.landau_spectrum(cutoff, frame, tolerance)
    return {
        "frame": frame.to_dict(),
        "cutoff": cutoff,
        "levels": [level.to_dict() for level in levels],
    }


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dirac_verify",
        description=(
            "Exact verification of Dirac's so(2,3) representation in the "
            "Landau problem and its conformal, hydrogen and spinor relatives"
        ),
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
    # Every suite, JSON report
    dirac_verify verify all --format json

    # One presentation of the so(2,3) generators
    dirac_verify verify so23 --presentation oscillator

    # Printed KS rows (Hopf norm check becomes an expected failure)
    dirac_verify verify transforms --ks-mode paper-literal

    # Landau levels in a 10 kG field
    dirac_verify spectrum landau --cutoff 12 --field-gauss 1e4

    # Exact sigma matrices
    dirac_verify dump sigma --format json
        """,
    )

    try:
        from . import __version__

        version_string = f"%(prog)s {__version__}"
    except ImportError:
        version_string = "%(prog)s (version unknown)"

    parser.add_argument("--version", action="version", version=version_string)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--config", help="Path to configuration file (default: ~/.diracrc or .diracrc)"
    )
    common.add_argument("--seed", type=int, help="Sampling seed")
    common.add_argument("--trials", type=int, help="Random samples per property")
    common.add_argument("--cutoff", type=int, help="Quanta per mode (two-mode checks)")
    common.add_argument("--ks-mode", choices=KS_MODES, help="KS normalization")
    common.add_argument(
        "--lc-momenta", choices=LC_MOMENTA_MODES, help="LC momentum normalization"
    )
    common.add_argument("--format", choices=OUTPUT_FORMATS, help="Report format")
    common.add_argument("--output", metavar="FILE", help="Write the report to FILE")
    common.add_argument("--workers", type=int, help="Concurrent suites")
    common.add_argument(
        "--verbose", "-v", action="store_true", help="Log progress to the console"
    )

    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser(
        "verify", parents=[common], help="Run verification suites"
    )
    verify.add_argument("target", choices=VERIFY_TARGETS)
    verify.add_argument(
        "--presentation",
        choices=landau.PRESENTATIONS,
        default="oscillator",
        help="Presentation for 'verify so23'",
    )

    spectrum = sub.add_parser(
        "spectrum", parents=[common], help="Landau levels on the Fock interior"
    )
    spectrum.add_argument("target", choices=("landau",))
    spectrum.add_argument("--field-gauss", type=float, help="Magnetic field in gauss")
    spectrum.add_argument("--mass", type=float, help="Particle mass in grams")
    spectrum.add_argument("--charge", type=float, help="Particle charge in statcoulomb")

    dump = sub.add_parser("dump", parents=[common], help="Export exact tables as JSON")
    dump.add_argument("target", choices=DUMP_TARGETS)

    return parser


def _given(value: Any, fallback: Any) -> Any:
    """Command-line value unless the flag was omitted; 0 counts as given."""
    return value if value is not None else fallback


def _settings(config: VerifyConfig, args: argparse.Namespace) -> SuiteConfig:
    suites = None
    if args.command == "verify" and args.target in SUITE_NAMES:
        suites = [args.target]
    settings = config.suite_config(suites)
    return settings.with_overrides(
        seed=args.seed,
        trials=args.trials,
        fock_cutoff_2mode=args.cutoff,
        ks_mode=args.ks_mode,
        lc_momenta=args.lc_momenta,
        output=args.format,
        workers=args.workers,
    )


def _write(text: str, output: Optional[str], config: VerifyConfig) -> bool:
    if not output:
        print(text)
        return True
    path = Path(output)
    if not path.is_absolute():
        path = config.expand_path(config.get("paths.report_dir", ".")) / path
    try:
        path.write_text(text + "\n", encoding="utf-8")
    except OSError as e:
        print(ErrorMessages.output_write_error(str(path), e), file=sys.stderr)
        return False
    logger.info(f"Report written to {path}")
    return True


def _print_summary(records: Sequence[CheckRecord]) -> None:
    failed = [r.id for r in records if r.failed]
    if failed:
        print(ErrorMessages.checks_failed(failed, len(records)), file=sys.stderr)


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Main entry point for the verification runner."""
    parser = build_parser()
    args = parser.parse_args(argv)

    config_path = Path(args.config).expanduser() if args.config else None
    try:
        config = get_config(config_path, reload=config_path is not None)
        settings = _settings(config, args)
    except ConfigError as e:
        print(ErrorMessages.config_error(e, args.config or ""), file=sys.stderr)
        return EXIT_USAGE

    log_dir = config.expand_path(
        config.get("paths.log_location", "~/.dirac_verify_logs")
    )
    setup_logging(f"dirac_verify_{args.command}", log_dir, args.verbose)

    if args.command == "dump":
        payload = dump_payload(args.target)
        ok = _write(json.dumps(payload, indent=2, sort_keys=True), args.output, config)
        return EXIT_OK if ok else EXIT_FAILED

    if args.command == "spectrum":
        landau_section = config.get_section("landau")
        try:
            frame = LandauFrame(
                field_gauss=_given(args.field_gauss, landau_section["field_gauss"]),
                mass_g=_given(args.mass, landau_section["mass_g"]),
                charge_esu=_given(args.charge, landau_section["charge_esu"]),
            )
        except ConfigError as e:
            print(ErrorMessages.config_error(e), file=sys.stderr)
            return EXIT_USAGE
        cutoff = _given(args.cutoff, landau_section.get("spectrum_cutoff", 12))
        try:
            payload = spectrum_payload(cutoff, frame, settings.tolerance_eigen)
        except ConfigError as e:
            print(ErrorMessages.config_error(e), file=sys.stderr)
            return EXIT_USAGE
        ok = _write(json.dumps(payload, indent=2, sort_keys=True), args.output, config)
        return EXIT_OK if ok else EXIT_FAILED

    if args.target == "so23":
        records, status = run_so23(args.presentation)
        suite_name = f"so23.{args.presentation}"
    else:
        records, status = run_suite(settings)
        suite_name = args.target

    fmt = settings.output
    colors = config.get("report.colors", {})
    show_notes = bool(config.get("report.show_notes", True))
    if fmt == "text" and not args.output and RICH_AVAILABLE:
        console = Console()
        console.print(build_table(records, f"suite: {suite_name}", colors, show_notes))
        counts = summarize(records)
        console.print(
            f"{counts['pass']} passed, {counts['fail']} failed, "
            f"{counts['expected_fail']} expected failures"
        )
    else:
        text = emit_report(
            records,
            fmt,
            suite=suite_name,
            config=settings.to_dict(),
            colors=colors,
            show_notes=show_notes,
        )
        if not _write(text, args.output, config):
            return EXIT_FAILED

    _print_summary(records)
    logger.info(f"{suite_name}: {len(records)} checks, exit status {status}")
    return status


if __name__ == "__main__":
    sys.exit(main())
