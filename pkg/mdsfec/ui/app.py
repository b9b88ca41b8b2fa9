from __future__ import annotations

from typing import ClassVar

from textual.app import App, ComposeResult
from textual.binding import Binding
from textual.containers import Horizontal
from textual.widgets import DataTable, Input, Static

from mdsfec.cli.demo import build_demo_code
from mdsfec.code import codec, verify
from mdsfec.code.codec import DecodeEvent, DecodeOutcome
from mdsfec.code.fourier import FourierCtx
from mdsfec.code.mdscode import CodeSpec
from mdsfec.config import Config
from mdsfec.errors import MdsFecError, OracleLimitError
from mdsfec.ui.command_log import CommandLog
from mdsfec.ui.header import CrumbBar, HeaderBar
from mdsfec.ui.stage_panel import StagePanel, ViewChanged
from mdsfec.ui.theme import APP_CSS
from mdsfec.ui.word_panel import WordPanel, WordSubmitted


class InspectorApp(App):
    """Browse a code's matrices and step through decoding received words."""

    CSS = APP_CSS

    BINDINGS: ClassVar[list[Binding]] = [
        Binding("colon", "command_mode", "Command", show=False),
        Binding("question_mark", "toggle_help", "Help", show=False),
        Binding("escape", "go_back", "Back", show=False),
        Binding("w", "toggle_word", "Decoder", show=False),
        Binding("f", "view('f')", "Fourier", show=False),
        Binding("g", "view('g')", "Generator", show=False),
        Binding("h", "view('h')", "Check", show=False),
        Binding("k", "view('k')", "Inverse", show=False),
        Binding("ctrl+c", "quit", "Quit", show=False),
    ]

    def __init__(self, code: CodeSpec, config: Config | None = None) -> None:
        super().__init__()
        self.code = code
        self.config = config or Config()
        self.last_outcome: DecodeOutcome | None = None
        self._word_visible = False

    def compose(self) -> ComposeResult:
        yield HeaderBar(self.code)
        yield CrumbBar()
        with Horizontal(id="main-container"):
            yield StagePanel()
            yield WordPanel()
        yield CommandLog()
        yield Input(placeholder="", id="command-bar")
        yield Static("", id="help-modal")

    def on_mount(self) -> None:
        panel = self.query_one(StagePanel)
        self.query_one(CrumbBar).set_view(panel.view_name)
        self.query_one(CommandLog).log_info(f"code {self.code}, omega = {self.code.ctx.omega}")
        panel.show(self.code)
        self._focus_table()

    # ── Actions ─────────────────────────────────────────

    def action_command_mode(self) -> None:
        cmd_bar = self.query_one("#command-bar", Input)
        cmd_bar.add_class("visible")
        cmd_bar.value = ":"
        cmd_bar.focus()

    def action_go_back(self) -> None:
        self.query_one("#command-bar", Input).remove_class("visible")
        self.query_one("#help-modal", Static).remove_class("visible")
        self._focus_table()

    def action_view(self, key: str) -> None:
        self.query_one(StagePanel).set_view(key)

    def action_toggle_word(self) -> None:
        panel = self.query_one(WordPanel)
        self._word_visible = not self._word_visible
        if self._word_visible:
            panel.add_class("visible")
            panel.focus_input()
        else:
            panel.remove_class("visible")
            self._focus_table()
        self.query_one(CrumbBar).set_word_active(self._word_visible)

    def action_toggle_help(self) -> None:
        modal = self.query_one("#help-modal", Static)
        if modal.has_class("visible"):
            modal.remove_class("visible")
            self._focus_table()
        else:
            modal.update(self._build_help_text())
            modal.add_class("visible")
            modal.focus()

    # ── Event handlers ──────────────────────────────────

    def on_view_changed(self, event: ViewChanged) -> None:
        self.query_one(CrumbBar).set_view(event.name)
        self.query_one(StagePanel).show(self.code)

    def on_word_submitted(self, event: WordSubmitted) -> None:
        self.decode_text(event.text)

    def on_input_submitted(self, event: Input.Submitted) -> None:
        if event.input.id == "command-bar":
            event.input.remove_class("visible")
            self.handle_command(event.value.strip().lstrip(":"))
            self._focus_table()

    # ── Internal ────────────────────────────────────────

    def _focus_table(self) -> None:
        try:
            self.query_one("#stage-table", DataTable).focus()
        except Exception:
            pass

    def set_code(self, code: CodeSpec) -> None:
        self.code = code
        self.last_outcome = None
        self.query_one(HeaderBar).set_code(code)
        self.query_one(StagePanel).show(code)
        self.query_one(CommandLog).log_ok("code", f"{code}, omega = {code.ctx.omega}")

    def decode_text(self, text: str) -> DecodeOutcome | None:
        panel = self.query_one(WordPanel)
        cmd_log = self.query_one(CommandLog)
        try:
            word = [int(x) for x in text.replace(",", " ").split()]
            self.last_outcome = None
            panel.add_word(word)
            outcome = codec.decode(self.code, word, on_event=self._on_decode_event)
        except (ValueError, MdsFecError) as e:
            panel.add_error(str(e))
            cmd_log.log_error("decode", str(e))
            return None
        self.last_outcome = outcome
        if not outcome.ok:
            cmd_log.log_error("decode", f"{outcome.stage}: {outcome.reason}")
        elif outcome.positions:
            cmd_log.log_fix("decode", "corrected positions " + ",".join(map(str, outcome.positions)))
        else:
            cmd_log.log_ok("decode", "no errors")
        return outcome

    def _on_decode_event(self, event: DecodeEvent) -> None:
        self.query_one(WordPanel).add_event(event)

    def handle_command(self, cmd: str) -> None:
        """Process : commands."""
        if not cmd:
            return
        cmd_log = self.query_one(CommandLog)
        parts = cmd.split()
        verb, args = parts[0].lower(), parts[1:]

        if verb in ("q", "quit"):
            self.exit()
            return

        if verb in ("f", "g", "h", "k"):
            self.action_view(verb)
            return

        if verb == "demo":
            self.set_code(build_demo_code())
            return

        if verb == "verify":
            try:
                d = verify.min_distance(self.code.field, self.code.generator, self.config.oracle_limit)
            except OracleLimitError as e:
                cmd_log.log_info(f"distance not checked: {e}")
                return
            if d == self.code.d:
                cmd_log.log_ok("verify", f"minimum distance {d}")
            else:
                cmd_log.log_error("verify", f"minimum distance {d}, expected {self.code.d}")
            return

        if verb == "code":
            if not 3 <= len(args) <= 5 or not all(a.lstrip("-").isdigit() for a in args):
                cmd_log.log_error("code", "usage: code n r p [b k]")
                return
            n, r, p, b, k = [int(a) for a in args] + [0, 1][len(args) - 3 :]
            try:
                self.set_code(CodeSpec(FourierCtx.for_length(n, p), r, b, k))
            except MdsFecError as e:
                cmd_log.log_error("code", str(e))
            return

        cmd_log.log_error(verb, "unknown command")

    def _build_help_text(self) -> str:
        return (
            "[bold #5fd7ff]mdsfec inspector[/]\n"
            "\n"
            "[bold #ffd75f]Views[/]\n"
            "  [bold]f[/]          Fourier matrix F_n\n"
            "  [bold]g[/]          Generator rows\n"
            "  [bold]h[/]          Check matrix H^T\n"
            "  [bold]k[/]          Right inverse K\n"
            "\n"
            "[bold #ffd75f]Decoder[/]\n"
            "  [bold]w[/]          Toggle decoder panel\n"
            "  Type n symbols and press Enter\n"
            "\n"
            "[bold #ffd75f]Commands[/]  (press : first)\n"
            "  :code n r p [b k]  Switch code\n"
            "  :demo              (12,6,7) over GF(13)\n"
            "  :verify            Brute-force distance check\n"
            "  :q :quit           Quit\n"
            "\n"
            "  [bold]?[/] help   [bold]Esc[/] back   [bold]Ctrl-c[/] quit\n"
        )
