"""Run configuration shared by the command-line entry points."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class RunConfig:
    """Options common to the CLI subcommands.

    max_table_cells bounds #characters x #classes for the table-building
    commands; they refuse rather than stall on oversized requests.
    """

    q: int
    n: int
    fmt: str = "json"
    jobs: int = 1
    max_table_cells: int = 4096
    approx: bool = False
    out: str | None = None
