"""Rich output for free links CLI: JSON reports on stdout, diagnostics on stderr."""

import json
from typing import Dict, List, Optional

from rich.console import Console
from rich.table import Table

# Diagnostics never touch stdout; no colour so output stays script-friendly.
_console = Console(stderr=True, no_color=True, highlight=False, soft_wrap=True)
_stdout = Console(no_color=True, highlight=False, soft_wrap=True)
_quiet = False


def set_quiet(quiet: bool) -> None:
    """Suppress stderr diagnostics (errors are still shown)."""
    global _quiet
    _quiet = quiet


def print_report(payload: Dict) -> None:
    """
    Write a report as sorted, indented JSON on stdout.

    Args:
        payload: JSON-serializable report dictionary
    """
    _stdout.print(json.dumps(payload, sort_keys=True, indent=2), markup=False)


def display_examples_table(rows: List[Dict[str, Optional[str]]]) -> None:
    """
    Display the built-in examples as a table on stderr.

    Args:
        rows: Dicts with ``name``, ``code`` and ``note`` keys
    """
    if _quiet:
        return
    if not rows:
        _console.print("No examples to display.")
        return

    table = Table(title="Built-in examples", show_header=True)
    table.add_column("Name", no_wrap=True)
    table.add_column("Gauss code", max_width=60)
    table.add_column("Note", max_width=40)
    for row in rows:
        table.add_row(row["name"], row["code"] or "none found", row.get("note") or "")
    _console.print(table)


def display_success(message: str) -> None:
    """
    Display a success message.

    Args:
        message: Success message to display
    """
    if not _quiet:
        _console.print(f"✔ {message}", markup=False)


def display_error(message: str) -> None:
    """
    Display an error message.

    Args:
        message: Error message to display
    """
    _console.print(f"✘ {message}", markup=False)


def display_info(message: str) -> None:
    """
    Display an info message.

    Args:
        message: Info message to display
    """
    if not _quiet:
        _console.print(f"ℹ {message}", markup=False)
