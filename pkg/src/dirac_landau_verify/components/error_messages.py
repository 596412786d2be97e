"""
Error message utilities with actionable suggestions.

Provides formatted messages for configuration problems, bad arguments and
failed checks, each with a short "To fix" list.
"""

from collections.abc import Sequence


def _numbered(suggestions: Sequence[str]) -> str:
    return "\n  ".join(f"{i + 1}. {s}" for i, s in enumerate(suggestions))


class ErrorMessages:
    """Centralized error messages with actionable suggestions."""

    @staticmethod
    def config_error(error: Exception, filepath: str = "") -> str:
        """Error message for an invalid configuration value or file."""
        suggestions = [
            "Check the suite section of your .diracrc",
            "Counts must be positive integers and tolerances positive numbers",
            "ks_mode is hopf-normalized or paper-literal",
            "lc_momenta is as-printed or canonical",
        ]
        if filepath:
            suggestions.insert(0, f'Check the file parses as YAML: "{filepath}"')
        location = f"\nFile: {filepath}" if filepath else ""
        return f"""Error: Invalid configuration
{location}
Error: {error}

To fix:
  {_numbered(suggestions)}"""

    @staticmethod
    def unknown_suite(name: str, known: Sequence[str]) -> str:
        """Error message for an unknown suite name."""
        return f"""Error: Unknown suite "{name}"

Available suites: {", ".join(known)}

To fix:
  1. Run "dirac_verify verify all" to run every suite
  2. Or pick one of the names above"""

    @staticmethod
    def checks_failed(failed_ids: Sequence[str], total: int) -> str:
        """Summary printed when at least one check fails."""
        shown = list(failed_ids[:10])
        more = len(failed_ids) - len(shown)
        listing = "\n".join(f"  • {check_id}" for check_id in shown)
        if more > 0:
            listing += f"\n  … and {more} more"
        return f"""{len(failed_ids)} of {total} checks failed:
{listing}

To investigate:
  1. Re-run the failing suite with --verbose for per-check logging
  2. Use --format json to see lhs, rhs and residual of each record
  3. Compare seeds: failures that move with --seed point at sampled inputs"""

    @staticmethod
    def output_write_error(filepath: str, error: Exception) -> str:
        """Error message for a report file that cannot be written."""
        return f"""Error: Could not write report

File: {filepath}
Error: {error}

To fix:
  1. Check the directory exists and is writable
  2. Or omit --output to print the report to stdout"""

    @staticmethod
    def unexpected_error(context: str, error: Exception) -> str:
        """Error message for an exception raised inside a suite."""
        return f"""Error: {context} raised {type(error).__name__}

Error: {error}

To fix:
  1. Re-run with --verbose and check the log file for the traceback
  2. Lower --trials or the Fock cutoffs if the error is a resource limit"""
