from __future__ import annotations

from textual.widgets import Static

from mdsfec.code.mdscode import CodeSpec


class HeaderBar(Static):
    """Top bar: code parameters and field."""

    def __init__(self, code: CodeSpec) -> None:
        self.code = code
        super().__init__("", id="header-bar")

    def render(self) -> str:
        c = self.code
        parts = [
            " [bold #5fd7ff]mdsfec[/]",
            f"code: [#ffd75f]({c.n},{c.r},{c.d})[/]",
            f"field: [#ffd75f]{c.field}[/]",
            f"omega: [#ffd75f]{c.ctx.omega}[/]",
            f"t: [#ffd75f]{c.t}[/]",
        ]
        if not c.is_consecutive:
            parts.append(f"rows: [#ffd75f]{c.start}+{c.step}j[/]")
        return "  ".join(parts)

    def set_code(self, code: CodeSpec) -> None:
        self.code = code
        self.refresh()


class CrumbBar(Static):
    """Breadcrumb bar: current matrix view and key hints."""

    def __init__(self) -> None:
        self._view = "Generator"
        self._word_active = False
        super().__init__("", id="crumb-bar")

    def render(self) -> str:
        crumb = f" [bold #5fd7ff]{self._view}[/]"
        hints = []
        if self._word_active:
            hints.append("[#5fd7ff]w[/]:decoder")
        hints.extend([
            "[dim]f g h k[/]:views",
            "[dim]?[/]:help",
            "[dim]:[/]:cmd",
            "[dim]<esc>[/]:back",
        ])
        return crumb + "  " + "  ".join(hints)

    @property
    def view(self) -> str:
        return self._view

    def set_view(self, view: str) -> None:
        self._view = view
        self.refresh()

    def set_word_active(self, active: bool) -> None:
        self._word_active = active
        self.refresh()
