"""Worked decoding example: the (12,6,7) code of the first six rows of F_12
over GF(13) with omega = 2, correcting three errors.

Every intermediate is printed and compared with known values.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import TextIO

from mdsfec.code import codec, linalg
from mdsfec.code.codec import DecodeEvent
from mdsfec.code.fourier import FourierCtx
from mdsfec.code.mdscode import CodeSpec
from mdsfec.field.search import make_field

F12 = [
    [1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1],
    [1, 2, 4, 8, 3, 6, 12, 11, 9, 5, 10, 7],
    [1, 4, 3, 12, 9, 10, 1, 4, 3, 12, 9, 10],
    [1, 8, 12, 5, 1, 8, 12, 5, 1, 8, 12, 5],
    [1, 3, 9, 1, 3, 9, 1, 3, 9, 1, 3, 9],
    [1, 6, 10, 8, 9, 2, 12, 7, 3, 5, 4, 11],
    [1, 12, 1, 12, 1, 12, 1, 12, 1, 12, 1, 12],
    [1, 11, 4, 5, 3, 7, 12, 2, 9, 8, 10, 6],
    [1, 9, 3, 1, 9, 3, 1, 9, 3, 1, 9, 3],
    [1, 5, 12, 8, 1, 5, 12, 8, 1, 5, 12, 8],
    [1, 10, 9, 12, 3, 4, 1, 10, 9, 12, 3, 4],
    [1, 7, 10, 5, 9, 11, 12, 6, 3, 8, 4, 2],
]
# rows e_1, e_6, e_11, e_4, e_9, e_2: start 1, step 5
L_ROWS = [1, 6, 11, 4, 9, 2]

RECEIVED = [8, 9, 2, 6, 3, 3, 10, 8, 4, 1, 5, 7]
EXPECTED = {
    "s": [2, 9, 12, 10, 11, 11],
    "hankel": [[2, 9, 12, 10], [9, 12, 10, 11], [12, 10, 11, 11]],
    "x": [7, 1, 7, 1],
    "a": [3, 12, 7, 0, 1, 0, 1, 2, 4, 0, 10, 12],
    "positions": [3, 5, 9],
    "magnitudes": [10, 1, 4],
    "error": [0, 0, 0, 10, 0, 1, 0, 0, 0, 4, 0, 0],
    "c": [8, 9, 2, 9, 3, 2, 10, 8, 4, 10, 5, 7],
    "data": [1, 2, 3, 4, 5, 6],
}


@dataclass
class Transcript:
    lines: list[str] = field(default_factory=list)
    mismatch: str = ""

    def show(self, name: str, value: list[int] | list[list[int]]) -> None:
        if value and isinstance(value[0], list):
            self.lines.append(f"{name} =")
            self.lines.extend("  " + _fmt(row) for row in value)
        else:
            self.lines.append(f"{name} = {_fmt(value)}")

    def expect(self, name: str, got: object, want: object) -> None:
        self.show(name, got)  # type: ignore[arg-type]
        if got != want and not self.mismatch:
            self.mismatch = f"{name}: expected {want}, got {got}"


def _fmt(v: list[int]) -> str:
    return " ".join(str(x) for x in v)


def build_demo_code() -> CodeSpec:
    f = make_field(13)
    return CodeSpec(FourierCtx(f, 12, 2), 6)


def run_demo() -> Transcript:
    tr = Transcript()
    code = build_demo_code()
    f, ctx = code.field, code.ctx
    tr.lines.append(f"code = {code}  omega = {ctx.omega}")
    tr.expect("F_12", ctx.matrix(), F12)
    tr.expect("K", code.generator, F12[:6])
    alt = CodeSpec(ctx, 6, 1, 5)
    tr.expect("L", alt.generator, [F12[i] for i in L_ROWS])
    tr.show("w", RECEIVED)

    events: dict[str, DecodeEvent] = {}
    outcome = codec.decode(code, RECEIVED, on_event=lambda e: events.setdefault(e.kind, e))
    if not outcome.ok:
        tr.mismatch = tr.mismatch or f"decode: {outcome.stage}: {outcome.reason}"
        return tr

    tr.expect("s", events["syndrome"].values, EXPECTED["s"])
    tr.expect("hankel", events["hankel"].matrix, EXPECTED["hankel"])
    kernel = events["kernel"].values
    tr.show("kernel", kernel)
    # the tabulated kernel vector is this one scaled to lead with 7
    x = linalg.vec_scale(f, kernel, EXPECTED["x"][0])
    tr.expect("x", x, EXPECTED["x"])
    tr.expect("a", codec.locator(code, x), EXPECTED["a"])
    tr.expect("positions", outcome.positions, EXPECTED["positions"])
    tr.expect("magnitudes", events["magnitudes"].values, EXPECTED["magnitudes"])
    tr.expect("error", outcome.error_vector, EXPECTED["error"])
    tr.expect("c", outcome.codeword, EXPECTED["c"])
    scaled = [linalg.vec_scale(f, col, 12) for col in linalg.transpose(code.right_inv)]
    tr.expect("12 K^T", scaled, [F12[i] for i in (0, 11, 10, 9, 8, 7)])
    tr.expect("data", outcome.data, EXPECTED["data"])
    return tr


def print_demo(out: TextIO) -> int:
    tr = run_demo()
    for line in tr.lines:
        out.write(line + "\n")
    if tr.mismatch:
        out.write(f"MISMATCH {tr.mismatch}\n")
        return 1
    out.write("all values match\n")
    return 0
