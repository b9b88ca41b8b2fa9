from __future__ import annotations

from typing import TextIO

from rich.console import Console


class DiagnosticLog:
    """Tagged per-block diagnostics, written apart from the data stream."""

    def __init__(self, file: TextIO | None = None) -> None:
        self.console = Console(
            file=file, stderr=file is None, highlight=False, soft_wrap=True
        )

    def log_ok(self, name: str, detail: str) -> None:
        self.console.print(f"[green]\\[OK  ][/] {name} -> {detail}")

    def log_fix(self, name: str, detail: str) -> None:
        self.console.print(f"[rgb(255,165,0)]\\[FIX ][/] {name} -> {detail}")

    def log_error(self, name: str, detail: str) -> None:
        self.console.print(f"[red]\\[ERR ][/] {name} -> {detail}")

    def log_info(self, msg: str) -> None:
        self.console.print(f"[white]\\[INFO][/] {msg}")
