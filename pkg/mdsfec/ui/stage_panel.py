from __future__ import annotations

from textual.app import ComposeResult
from textual.containers import Vertical
from textual.message import Message as TextualMessage
from textual.widgets import DataTable

from mdsfec.code.linalg import Matrix
from mdsfec.code.mdscode import CodeSpec

VIEWS = {
    "f": "Fourier",
    "g": "Generator",
    "h": "Check H^T",
    "k": "Right inverse K",
}


class ViewChanged(TextualMessage):
    """Posted when the matrix view changes."""

    def __init__(self, key: str, name: str) -> None:
        super().__init__()
        self.key = key
        self.name = name


def view_matrix(code: CodeSpec, key: str) -> tuple[Matrix, list[str]]:
    """Matrix for a view plus the label of each of its rows."""
    if key == "f":
        return code.ctx.matrix(), [f"e{i}" for i in range(code.n)]
    if key == "g":
        return code.generator, [f"e{i}" for i in code.indices]
    if key == "h":
        return code.check_t, [str(i) for i in range(code.n)]
    return code.right_inv, [str(i) for i in range(code.n)]


class StagePanel(Vertical):
    """Matrix table for the current view."""

    def __init__(self) -> None:
        super().__init__(id="stage-panel")
        self._view = "g"

    def compose(self) -> ComposeResult:
        yield DataTable(id="stage-table")

    def on_mount(self) -> None:
        self.query_one("#stage-table", DataTable).cursor_type = "row"

    @property
    def view(self) -> str:
        return self._view

    @property
    def view_name(self) -> str:
        return VIEWS[self._view]

    def set_view(self, key: str) -> None:
        if key in VIEWS:
            self._view = key
            self.post_message(ViewChanged(key, VIEWS[key]))

    def show(self, code: CodeSpec) -> None:
        m, labels = view_matrix(code, self._view)
        cols = len(m[0]) if m else 0
        self.border_title = f"{VIEWS[self._view]} ({len(m)}x{cols})"
        self.update_data(
            ["ROW"] + [str(j) for j in range(cols)],
            [[label] + [str(x) for x in row] for label, row in zip(labels, m)],
        )

    def update_data(self, headers: list[str], rows: list[list[str]]) -> None:
        table = self.query_one("#stage-table", DataTable)
        table.clear(columns=True)
        for h in headers:
            table.add_column(h, key=h)
        for row in rows:
            table.add_row(*row)

    @property
    def row_count(self) -> int:
        return self.query_one("#stage-table", DataTable).row_count
