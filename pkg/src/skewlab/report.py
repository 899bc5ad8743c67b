"""Typed tables and the claim-by-claim evidence reports.

Cells hold exact values (int, Fraction, bool, None, str, float). CSV output
uses RFC 4180 quoting with counts as decimal integers and rationals as
"p/q", and round-trips losslessly through ``read_table_csv``. JSON output
sorts keys and renders every integer as a decimal string so downstream
consumers never lose precision to floating point.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from .counting import (
    ceil_pow2,
    fibonacci_count,
    floor_pow2,
    gamma_distributions_upto,
)
from .solver import EXACT_M_DEFAULT_CAP, exact_M
from .sperner import MAX_POSET_LENGTH, max_antichain

FORMATS = ("csv", "json", "markdown")


@dataclass(frozen=True)
class Table:
    columns: tuple[str, ...]
    rows: tuple[tuple[object, ...], ...]

    def __post_init__(self) -> None:
        for row in self.rows:
            if len(row) != len(self.columns):
                raise ValueError("row width does not match column count")


def _cell_text(value: object) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (int, Fraction)):
        return str(value)
    if isinstance(value, float):
        return repr(value)
    return str(value)


def _cell_json(value: object) -> object:
    if value is None or isinstance(value, (bool, float)):
        return value
    if isinstance(value, int):
        return str(value)
    if isinstance(value, Fraction):
        return str(value)
    return str(value)


def render_csv(table: Table) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(table.columns)
    for row in table.rows:
        writer.writerow([_cell_text(v) for v in row])
    return buf.getvalue()


def render_json(table: Table) -> str:
    rows = [
        {col: _cell_json(v) for col, v in zip(table.columns, row)}
        for row in table.rows
    ]
    return json.dumps({"columns": list(table.columns), "rows": rows}, sort_keys=True) + "\n"


def render_markdown(table: Table) -> str:
    lines = [
        "| " + " | ".join(table.columns) + " |",
        "| " + " | ".join("---" for _ in table.columns) + " |",
    ]
    for row in table.rows:
        lines.append("| " + " | ".join(_cell_text(v) for v in row) + " |")
    return "\n".join(lines) + "\n"


def render(table: Table, fmt: str) -> str:
    if fmt == "csv":
        return render_csv(table)
    if fmt == "json":
        return render_json(table)
    if fmt == "markdown":
        return render_markdown(table)
    raise ValueError(f"unknown format {fmt!r}; expected one of {FORMATS}")


def _parse_bool(text: str) -> bool:
    if text == "true":
        return True
    if text == "false":
        return False
    raise ValueError(f"not a boolean cell: {text!r}")


def read_table_csv(text: str, parsers: Sequence[Callable[[str], object]]) -> Table:
    """Parse render_csv output back into typed cells; "" parses to None."""
    reader = csv.reader(io.StringIO(text))
    header = next(reader)
    if len(header) != len(parsers):
        raise ValueError("parser count does not match column count")
    rows = []
    for raw in reader:
        rows.append(
            tuple(
                None if cell == "" else parse(cell)
                for parse, cell in zip(parsers, raw)
            )
        )
    return Table(tuple(header), tuple(rows))


BOOL = _parse_bool


def theorem_table(max_n: int, antichain_max_n: int = MAX_POSET_LENGTH) -> Table:
    """Per-n evidence for the two-sided bracket on the extremal family size.

    The lower side compares 2^n - |C_n| against floor(2^(0.96 n)); the upper
    side compares f_n - m_n against ceil(2^(0.69 n)) where the antichain
    value is available. Both comparisons are exact because the left sides
    are integers.
    """
    columns = (
        "n",
        "outside_construction",
        "bound_0_96",
        "lower_ok",
        "fib_minus_antichain",
        "bound_0_69",
        "upper_ok",
    )
    rows = []
    for dist in gamma_distributions_upto(max_n):
        n = dist.n
        outside = (1 << n) - dist.count_above(n)
        b96 = floor_pow2(24 * n, 25)
        b69 = ceil_pow2(69 * n, 100)
        if n <= antichain_max_n:
            deficit = fibonacci_count(n) - max_antichain(n).size
            upper_ok: bool | None = deficit >= b69
        else:
            deficit = None
            upper_ok = None
        rows.append((n, outside, b96, outside <= b96, deficit, b69, upper_ok))
    return Table(columns, tuple(rows))


def summary_table(
    n_lo: int,
    n_hi: int,
    exact_m_cap: int = EXACT_M_DEFAULT_CAP,
    antichain_max_n: int = MAX_POSET_LENGTH,
) -> Table:
    """Headline quantities per n: Fibonacci count, antichain maximum,
    construction size, exact family maximum where computed, and the
    antichain-complement upper bound."""
    if not 1 <= n_lo <= n_hi:
        raise ValueError(f"bad range [{n_lo}, {n_hi}]")
    columns = (
        "n",
        "fibonacci",
        "antichain_max",
        "construction_size",
        "exact_max",
        "upper_bound",
    )
    dists = {d.n: d for d in gamma_distributions_upto(n_hi)}
    rows = []
    for n in range(n_lo, n_hi + 1):
        fib = fibonacci_count(n)
        m_n = max_antichain(n).size if n <= antichain_max_n else None
        c_n = dists[n].count_above(n)
        exact = exact_M(n).size if n <= exact_m_cap else None
        upper = (1 << n) - (fib - m_n) if m_n is not None else None
        rows.append((n, fib, m_n, c_n, exact, upper))
    return Table(columns, tuple(rows))
