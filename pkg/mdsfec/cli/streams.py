"""Whitespace-separated canonical-integer symbol streams."""

from __future__ import annotations

from typing import Iterable, TextIO

from mdsfec.errors import PaddingError, StreamError
from mdsfec.field.gf import FieldSpec


def read_symbols(lines: Iterable[str], f: FieldSpec) -> list[int]:
    symbols: list[int] = []
    for lineno, line in enumerate(lines, 1):
        for token in line.split():
            try:
                v = int(token)
            except ValueError:
                raise StreamError(f"line {lineno}: {token!r} is not an integer") from None
            if not 0 <= v < f.order:
                raise StreamError(f"line {lineno}: symbol {v} is not an element of {f}")
            symbols.append(v)
    return symbols


def blocks(symbols: list[int], size: int) -> list[list[int]]:
    """Split into blocks of `size`; a short final block is an error."""
    if len(symbols) % size:
        raise PaddingError(
            f"final block has {len(symbols) % size} of {size} symbols (no implicit padding)"
        )
    return [symbols[i : i + size] for i in range(0, len(symbols), size)]


def write_block(out: TextIO, block: list[int]) -> None:
    out.write(" ".join(str(x) for x in block) + "\n")
