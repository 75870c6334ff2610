"""Dense matrices of Python integers and the ``detlab-matrix v1`` text format."""

from __future__ import annotations

import sys
from dataclasses import dataclass
from decimal import ROUND_HALF_EVEN, Context
from pathlib import Path
from typing import Sequence

from .errors import DimensionMismatch, FormatError

MATRIX_HEADER = "detlab-matrix v1"
SIG_DIGITS = 15

_RENDER_CONTEXT = Context(prec=SIG_DIGITS, rounding=ROUND_HALF_EVEN, Emax=10**9, Emin=-(10**9))


def allow_long_int_strings() -> None:
    """Lift CPython's int/str conversion digit limit (determinants exceed it)."""
    if hasattr(sys, "set_int_max_str_digits"):
        sys.set_int_max_str_digits(0)


@dataclass(frozen=True)
class IntMatrix:
    """Row-major dense matrix of arbitrary-precision integers."""

    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.rows < 1 or self.cols < 1:
            raise DimensionMismatch(f"matrix must be at least 1x1, got {self.rows}x{self.cols}")
        if len(self.entries) != self.rows * self.cols:
            raise DimensionMismatch(
                f"{len(self.entries)} entries for a {self.rows}x{self.cols} matrix"
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> IntMatrix:
        if not rows:
            raise DimensionMismatch("matrix must have at least one row")
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise DimensionMismatch("ragged rows")
        return cls(len(rows), width, tuple(int(x) for r in rows for x in r))

    @classmethod
    def identity(cls, n: int) -> IntMatrix:
        return cls(n, n, tuple(int(i == j) for i in range(n) for j in range(n)))

    @classmethod
    def zeros(cls, rows: int, cols: int | None = None) -> IntMatrix:
        cols = rows if cols is None else cols
        return cls(rows, cols, (0,) * (rows * cols))

    @classmethod
    def diagonal(cls, values: Sequence[int]) -> IntMatrix:
        n = len(values)
        return cls(n, n, tuple(values[i] if i == j else 0 for i in range(n) for j in range(n)))

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(ij)
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def column(self, j: int) -> tuple[int, ...]:
        return self.entries[j :: self.cols]

    def to_rows(self) -> list[list[int]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> IntMatrix:
        return IntMatrix(
            self.cols, self.rows, tuple(self.entries[i * self.cols + j] for j in range(self.cols) for i in range(self.rows))
        )

    def swap_rows(self, a: int, b: int) -> IntMatrix:
        rows = self.to_rows()
        rows[a], rows[b] = rows[b], rows[a]
        return IntMatrix.from_rows(rows)


def mat_mul(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    if a.cols != b.rows:
        raise DimensionMismatch(f"cannot multiply {a.rows}x{a.cols} by {b.rows}x{b.cols}")
    b_cols = [b.column(j) for j in range(b.cols)]
    out = []
    for i in range(a.rows):
        r = a.row(i)
        out.extend(sum(x * y for x, y in zip(r, c)) for c in b_cols)
    return IntMatrix(a.rows, b.cols, tuple(out))


def mat_add(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    if (a.rows, a.cols) != (b.rows, b.cols):
        raise DimensionMismatch(f"cannot add {a.rows}x{a.cols} and {b.rows}x{b.cols}")
    return IntMatrix(a.rows, a.cols, tuple(x + y for x, y in zip(a.entries, b.entries)))


def scale_columns(a: IntMatrix, factors: Sequence[int]) -> IntMatrix:
    """``a @ diag(factors)`` without forming the diagonal matrix."""
    if len(factors) != a.cols:
        raise DimensionMismatch(f"{len(factors)} column factors for {a.cols} columns")
    return IntMatrix(
        a.rows, a.cols, tuple(x * factors[k % a.cols] for k, x in enumerate(a.entries))
    )


# --- text format -----------------------------------------------------------


def format_matrix(m: IntMatrix) -> str:
    allow_long_int_strings()
    lines = [MATRIX_HEADER, f"rows {m.rows} cols {m.cols}"]
    lines.extend(" ".join(str(x) for x in m.row(i)) for i in range(m.rows))
    return "\n".join(lines) + "\n"


def parse_decimal(token: str, lineno: int) -> int:
    body = token[1:] if token.startswith("-") else token
    if not body or not body.isdigit() or not body.isascii():
        raise FormatError(f"line {lineno}: not a decimal integer: {token!r}")
    return int(token)


def parse_matrix(text: str) -> IntMatrix:
    allow_long_int_strings()
    lines = text.splitlines()
    while lines and lines[-1] == "":
        lines.pop()
    if not lines or lines[0] != MATRIX_HEADER:
        raise FormatError(f"line 1: expected {MATRIX_HEADER!r}")
    if len(lines) < 2:
        raise FormatError("line 2: missing dimensions")
    dims = lines[1].split(" ")
    if len(dims) != 4 or dims[0] != "rows" or dims[2] != "cols":
        raise FormatError(f"line 2: expected 'rows R cols C', got {lines[1]!r}")
    rows, cols = parse_decimal(dims[1], 2), parse_decimal(dims[3], 2)
    if rows < 1 or cols < 1:
        raise FormatError("line 2: dimensions must be positive")
    if len(lines) != rows + 2:
        raise FormatError(f"expected {rows} matrix rows, found {len(lines) - 2}")
    entries: list[int] = []
    for lineno, line in enumerate(lines[2:], start=3):
        tokens = line.split(" ")
        if len(tokens) != cols:
            raise FormatError(f"line {lineno}: expected {cols} entries, found {len(tokens)}")
        entries.extend(parse_decimal(t, lineno) for t in tokens)
    return IntMatrix(rows, cols, tuple(entries))


def read_matrix(path: str | Path) -> IntMatrix:
    return parse_matrix(Path(path).read_text(encoding="ascii"))


def write_matrix(m: IntMatrix, path: str | Path) -> None:
    Path(path).write_text(format_matrix(m), encoding="ascii")


# --- rendering --------------------------------------------------------------


def digit_count(value: int) -> int:
    allow_long_int_strings()
    return len(str(abs(value)))


def render_sci(value: int) -> str:
    """Scientific rendering with at most 15 significant digits.

    Rounds half to even and trims trailing zeros, e.g. ``1.95124219131987e9762``
    or ``-2e0``.
    """
    allow_long_int_strings()
    d = _RENDER_CONTEXT.create_decimal(str(value))
    sign, digits, exp = d.as_tuple()
    text = "".join(map(str, digits)).rstrip("0") or "0"
    exponent = exp + len(digits) - 1 if value else 0
    mantissa = text[0] + ("." + text[1:] if len(text) > 1 else "")
    return ("-" if sign else "") + mantissa + "e" + str(exponent)

