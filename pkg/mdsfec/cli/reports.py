"""Report tables as (headers, rows) of strings, for rich or Textual rendering."""

from __future__ import annotations

from fractions import Fraction
from typing import TextIO

from rich.console import Console
from rich.table import Table

from mdsfec.field.search import FieldCandidate, euler_phi
from mdsfec.plan.planner import FamilyEntry, Plan, SeriesEntry

Report = tuple[list[str], list[list[str]]]


def field_report(n: int, fields: list[FieldCandidate]) -> Report:
    headers = ["FIELD", "P", "BETA", "SIZE", "ROOTS", "NOTE"]
    roots = str(euler_phi(n))
    rows = []
    for c in fields:
        rows.append([
            c.name,
            str(c.p),
            str(c.beta),
            str(c.size),
            roots,
            "prime field" if c.is_prime_field else "",
        ])
    return headers, rows


def plan_report(plan: Plan) -> Report:
    headers = ["CODE", "T", "RATE", "MIN-N"]
    rows = [[
        f"({plan.n},{plan.r},{plan.d})",
        str(plan.t),
        f"{plan.rate} ({_decimal(plan.rate)})",
        str(plan.min_length),
    ]]
    return headers, rows


def series_report(entries: list[SeriesEntry]) -> Report:
    headers = ["CODE", "FIELD", "T", "D/N"]
    rows = [
        [f"({e.n},{e.r},{e.d})", str(e.field), str(e.t), _decimal(e.ratio)]
        for e in entries
    ]
    return headers, rows


def family_report(entries: list[FamilyEntry]) -> Report:
    headers = ["CODE", "T"]
    return headers, [[f"({e.n},{e.r},{e.d})", str(e.t)] for e in entries]


def render(out: TextIO, report: Report, title: str = "") -> None:
    headers, rows = report
    table = Table(title=title or None, show_edge=False, header_style="bold")
    for h in headers:
        table.add_column(h)
    for row in rows:
        table.add_row(*row)
    Console(file=out, width=120, highlight=False).print(table)


def _decimal(x: Fraction) -> str:
    return f"{float(x):.4f}"
