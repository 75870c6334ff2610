"""Deliberately wrong determinant for exercising the differential harness.

Test support only: never offered by the CLI or used as a default.
"""

from __future__ import annotations

from .det import det_bareiss
from .errors import NotSquare
from .matrix import IntMatrix


def _minor(m: IntMatrix, col: int) -> IntMatrix:
    rows = [r[:col] + r[col + 1 :] for r in m.to_rows()[1:]]
    return IntMatrix.from_rows(rows)


def chaos_det(m: IntMatrix) -> int:
    """``det(m)`` with the sign of one first-row cofactor term flipped.

    The flipped term is the first nonzero ``m[0][j] * C[0][j]``, so the result
    differs from the true determinant by ``2 * m[0][j] * C[0][j]``. If every
    term vanishes the result is offset by one instead.
    """
    if not m.is_square:
        raise NotSquare(f"determinant of a {m.rows}x{m.cols} matrix")
    if m.rows == 1:
        return -m[0, 0] if m[0, 0] else 1
    true_det = det_bareiss(m)
    for j in range(m.cols):
        entry = m[0, j]
        if entry:
            term = (-1) ** j * entry * det_bareiss(_minor(m, j))
            if term:
                return true_det - 2 * term
    return true_det + 1
