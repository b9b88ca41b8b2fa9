from __future__ import annotations

from textual.app import ComposeResult
from textual.containers import Vertical
from textual.message import Message as TextualMessage
from textual.widgets import Input, RichLog

from mdsfec.code.codec import DecodeEvent


class WordSubmitted(TextualMessage):
    """Posted when the user enters a received word."""

    def __init__(self, text: str) -> None:
        super().__init__()
        self.text = text


class WordPanel(Vertical):
    """Toggleable decoder panel: enter a word, watch each decoding stage."""

    def __init__(self) -> None:
        super().__init__(id="word-panel")
        self.border_title = "Decoder"

    def compose(self) -> ComposeResult:
        yield RichLog(id="word-log", markup=True, wrap=True)
        yield Input(placeholder="Received word, n symbols...", id="word-input")

    def on_input_submitted(self, event: Input.Submitted) -> None:
        if event.input.id == "word-input" and event.value.strip():
            text = event.value.strip()
            event.input.value = ""
            self.post_message(WordSubmitted(text))
            event.stop()

    def add_word(self, word: list[int]) -> None:
        log = self.query_one("#word-log", RichLog)
        log.write(f"[bold #ffd75f]w =[/] {_fmt(word)}")

    def add_event(self, event: DecodeEvent) -> None:
        log = self.query_one("#word-log", RichLog)
        if event.kind == "error":
            log.write(f"[bold red]FAIL[/] [red]{event.text}[/]")
        elif event.kind == "done":
            log.write("[dim]" + "─" * 40 + "[/]")
        elif event.matrix:
            log.write(f"  [#5fd7ff]{event.kind}[/]")
            for row in event.matrix:
                log.write(f"    {_fmt(row)}")
        else:
            log.write(f"  [#5fd7ff]{event.kind}[/] {_fmt(event.values)}")

    def add_error(self, text: str) -> None:
        self.query_one("#word-log", RichLog).write(f"[bold red]error:[/] [red]{text}[/]")

    def focus_input(self) -> None:
        self.query_one("#word-input", Input).focus()


def _fmt(v: list[int]) -> str:
    return " ".join(str(x) for x in v) or "-"
