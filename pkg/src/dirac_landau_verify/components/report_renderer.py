"""
Report rendering for check records.

JSON reports carry ``"schema": 1`` with sorted keys; ``generated_at`` is the
only field that changes between identical runs. Text reports are a
fixed-width table drawn with rich when it is installed.
"""

import io
import json
import logging
from collections.abc import Sequence
from datetime import datetime, timezone
from typing import Any, Optional

from .check_record import CheckRecord, CheckStatus

try:
    from rich.console import Console
    from rich.table import Table

    RICH_AVAILABLE = True
except ImportError:
    RICH_AVAILABLE = False
    Console = None  # type: ignore
    Table = None  # type: ignore

logger = logging.getLogger(__name__)

SCHEMA_VERSION = 1
TEXT_WIDTH = 120

DEFAULT_COLORS = {
    "pass": "green",
    "fail": "bold red",
    "expected-fail": "yellow",
}


def summarize(records: Sequence[CheckRecord]) -> dict[str, int]:
    """Counts per status."""
    counts = {"pass": 0, "fail": 0, "expected_fail": 0}
    for record in records:
        counts[record.status.value.replace("-", "_")] += 1
    return counts


def sort_records(records: Sequence[CheckRecord]) -> list[CheckRecord]:
    return sorted(records, key=lambda r: r.id)


def _notes_text(notes: dict[str, Any]) -> str:
    return ", ".join(
        f"{k}={json.dumps(v, sort_keys=True, default=str)}"
        for k, v in sorted(notes.items())
    )


def build_table(
    records: Sequence[CheckRecord],
    title: str = "",
    colors: Optional[dict[str, str]] = None,
    show_notes: bool = True,
) -> "Table":
    """rich table with one row per record."""
    colors = {**DEFAULT_COLORS, **(colors or {})}
    table = Table(title=title or None, show_lines=False)
    table.add_column("id", no_wrap=True)
    table.add_column("status")
    table.add_column("residual", justify="right")
    table.add_column("description")
    if show_notes:
        table.add_column("notes", overflow="fold")
    for record in sort_records(records):
        status = record.status.value
        row = [
            record.id,
            f"[{colors.get(status, '')}]{status}[/]" if colors.get(status) else status,
            f"{record.residual:.3g}",
            record.description,
        ]
        if show_notes:
            row.append(_notes_text(record.convention_notes))
        table.add_row(*row)
    return table


def _plain_table(records: Sequence[CheckRecord], show_notes: bool) -> str:
    records = sort_records(records)
    width = max((len(r.id) for r in records), default=2)
    lines = [f"{'id':<{width}}  {'status':<13}  {'residual':>9}  description"]
    lines.append("-" * len(lines[0]))
    for r in records:
        line = (
            f"{r.id:<{width}}  {r.status.value:<13}  {r.residual:>9.3g}  "
            f"{r.description}"
        )
        if show_notes and r.convention_notes:
            line += f"  [{_notes_text(r.convention_notes)}]"
        lines.append(line)
    return "\n".join(lines)


def emit_report(
    records: Sequence[CheckRecord],
    fmt: str = "text",
    suite: str = "all",
    config: Optional[dict[str, Any]] = None,
    colors: Optional[dict[str, str]] = None,
    show_notes: bool = True,
) -> str:
    """
    Serialize records as JSON or as a text table.

    Args:
        records: Check records in any order (output is sorted by id)
        fmt: "json" or "text"
        suite: Suite name stored in the JSON header
        config: Effective suite settings stored in the JSON header
        colors: rich styles per status for the text table
        show_notes: Include convention notes in the text table

    Returns:
        Serialized report
    """
    summary = summarize(records)
    if fmt == "json":
        document = {
            "schema": SCHEMA_VERSION,
            "suite": suite,
            "config": config or {},
            "generated_at": datetime.now(timezone.utc).isoformat(),
            "records": [r.to_dict() for r in sort_records(records)],
            "summary": summary,
        }
        return json.dumps(document, indent=2, sort_keys=True, default=str)

    footer = (
        f"{summary['pass']} passed, {summary['fail']} failed, "
        f"{summary['expected_fail']} expected failures"
    )
    if not RICH_AVAILABLE:
        return f"{_plain_table(records, show_notes)}\n\n{footer}"

    buffer = io.StringIO()
    console = Console(file=buffer, width=TEXT_WIDTH, record=True, color_system=None)
    console.print(build_table(records, f"suite: {suite}", colors, show_notes))
    console.print(footer)
    return console.export_text()


def parse_report(text: str) -> list[CheckRecord]:
    """
    Read the records of a JSON report.

    Raises:
        ValueError: Not a report, or an unsupported schema version
    """
    document = json.loads(text)
    if not isinstance(document, dict) or "records" not in document:
        raise ValueError("Not a verification report")
    if document.get("schema") != SCHEMA_VERSION:
        raise ValueError(f"Unsupported report schema {document.get('schema')!r}")
    return [CheckRecord.from_dict(item) for item in document["records"]]


def exit_status(records: Sequence[CheckRecord]) -> int:
    """0 when no record failed (expected failures allowed), else 1."""
    return 1 if any(r.status is CheckStatus.FAIL for r in records) else 0
