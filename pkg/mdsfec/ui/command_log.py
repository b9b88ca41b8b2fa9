from __future__ import annotations

from datetime import datetime

from textual.widgets import RichLog


class CommandLog(RichLog):
    """Bottom panel: timestamped command log."""

    def __init__(self) -> None:
        super().__init__(id="command-log", markup=True, wrap=True, max_lines=200)
        self.border_title = "Log"

    def _stamp(self) -> str:
        return f"[dim]{datetime.now().strftime('%H:%M:%S')}[/]"

    def log_ok(self, name: str, detail: str) -> None:
        self.write(f"{self._stamp()} [green]\\[OK  ][/] {name} -> {detail}")

    def log_fix(self, name: str, detail: str) -> None:
        self.write(f"{self._stamp()} [rgb(255,165,0)]\\[FIX ][/] {name} -> {detail}")

    def log_error(self, name: str, detail: str) -> None:
        self.write(f"{self._stamp()} [red]\\[ERR ][/] {name} -> {detail}")

    def log_info(self, msg: str) -> None:
        self.write(f"{self._stamp()} [white]\\[INFO][/] {msg}")
