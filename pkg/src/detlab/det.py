"""Exact integer determinants by three independent routes.

``det_bareiss`` is the workhorse. ``det_cofactor`` (Laplace expansion) and
``det_modular`` (residues modulo word-size primes plus Chinese remaindering)
share no code with it, so agreement between any two is real evidence.
"""

from __future__ import annotations

import enum
from math import isqrt, prod
from typing import Callable

from .errors import InternalInexactDivision, NotSquare, PrimePoolExhausted, TooLargeForCofactor
from .matrix import IntMatrix
from .primes import PRIME_POOL

COFACTOR_MAX_N = 10

# residues are reduced by the product of this many primes before the word-size mods
_RESIDUE_BATCH = 16


class DetAlgorithm(enum.Enum):
    BAREISS = "bareiss"
    COFACTOR = "cofactor"
    MODULAR = "modular"


def _require_square(m: IntMatrix) -> int:
    if not m.is_square:
        raise NotSquare(f"determinant of a {m.rows}x{m.cols} matrix")
    return m.rows


def det_bareiss(m: IntMatrix) -> int:
    """Fraction-free Gaussian elimination.

    Pivots on the first nonzero entry of the current column and tracks the
    sign of row swaps. Every division is checked for a zero remainder.
    """
    n = _require_square(m)
    a = m.to_rows()
    sign = 1
    prev = 1
    for k in range(n - 1):
        pivot_row = next((i for i in range(k, n) if a[i][k]), None)
        if pivot_row is None:
            return 0
        if pivot_row != k:
            a[k], a[pivot_row] = a[pivot_row], a[k]
            sign = -sign
        pivot = a[k][k]
        row_k = a[k]
        for i in range(k + 1, n):
            row_i = a[i]
            lead = row_i[k]
            for j in range(k + 1, n):
                num = pivot * row_i[j] - lead * row_k[j]
                q, r = divmod(num, prev)
                if r:
                    raise InternalInexactDivision(
                        f"step {k}: {num} not divisible by {prev}"
                    )
                row_i[j] = q
            row_i[k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


def det_cofactor(m: IntMatrix) -> int:
    """Laplace expansion along the first row, recursively.

    Minors are identified by the set of surviving columns, so each distinct
    minor is expanded once (2**n states instead of n! terms).
    """
    n = _require_square(m)
    if n > COFACTOR_MAX_N:
        raise TooLargeForCofactor(f"cofactor expansion is capped at n={COFACTOR_MAX_N}, got {n}")
    rows = m.to_rows()
    memo: dict[int, int] = {}

    def expand(depth: int, cols: tuple[int, ...], mask: int) -> int:
        # rows depth..n-1 restricted to columns `cols`
        if len(cols) == 1:
            return rows[depth][cols[0]]
        if mask in memo:
            return memo[mask]
        total = 0
        for pos, c in enumerate(cols):
            entry = rows[depth][c]
            if entry:
                minor = expand(depth + 1, cols[:pos] + cols[pos + 1 :], mask & ~(1 << c))
                total += -entry * minor if pos % 2 else entry * minor
        memo[mask] = total
        return total

    return expand(0, tuple(range(n)), (1 << n) - 1)


def hadamard_bound(m: IntMatrix) -> int:
    """Smallest integer ``B`` with ``B**2 >= prod_i sum_j m[i][j]**2``."""
    n = _require_square(m)
    squared = prod(sum(x * x for x in m.row(i)) for i in range(n))
    b = isqrt(squared)
    return b if b * b == squared else b + 1


def primes_for_bound(bound: int) -> tuple[int, ...]:
    """Shortest prefix of the prime pool whose product exceeds ``2*bound + 1``."""
    target = 2 * bound + 1
    acc = 1
    for count, p in enumerate(PRIME_POOL, start=1):
        acc *= p
        if acc > target:
            return PRIME_POOL[:count]
    raise PrimePoolExhausted(target.bit_length(), acc.bit_length())


def _residues(entries: tuple[int, ...], primes: tuple[int, ...]) -> list[list[int]]:
    """``out[t][k] == entries[k] % primes[t]``."""
    out: list[list[int]] = [[] for _ in primes]
    for start in range(0, len(primes), _RESIDUE_BATCH):
        batch = primes[start : start + _RESIDUE_BATCH]
        modulus = prod(batch)
        reduced = [e % modulus for e in entries]
        for offset, p in enumerate(batch):
            out[start + offset] = [r % p for r in reduced]
    return out


def det_mod_p(entries: list[int], n: int, p: int) -> int:
    """Determinant of a row-major ``n x n`` residue matrix over GF(p)."""
    a = [entries[i * n : (i + 1) * n] for i in range(n)]
    det = 1
    for k in range(n):
        pivot_row = next((i for i in range(k, n) if a[i][k]), None)
        if pivot_row is None:
            return 0
        if pivot_row != k:
            a[k], a[pivot_row] = a[pivot_row], a[k]
            det = -det
        row_k = a[k]
        pivot = row_k[k]
        det = det * pivot % p
        inv = pow(pivot, -1, p)
        tail_k = row_k[k + 1 :]
        for i in range(k + 1, n):
            row_i = a[i]
            f = row_i[k] * inv % p
            if f:
                row_i[k + 1 :] = [(x - f * y) % p for x, y in zip(row_i[k + 1 :], tail_k)]
    return det % p


def crt_symmetric(residues: list[int], primes: tuple[int, ...]) -> int:
    """Chinese remaindering with the symmetric lift into ``(-P/2, P/2]``."""
    modulus = prod(primes)
    total = 0
    for r, p in zip(residues, primes):
        cofactor = modulus // p
        total += r * cofactor * pow(cofactor % p, -1, p)
    total %= modulus
    return total - modulus if total > modulus // 2 else total


def det_modular(m: IntMatrix) -> int:
    """Determinant via residues modulo enough pool primes to cover the Hadamard bound."""
    n = _require_square(m)
    primes = primes_for_bound(hadamard_bound(m))
    residues = [det_mod_p(row, n, p) for row, p in zip(_residues(m.entries, primes), primes)]
    return crt_symmetric(residues, primes)


ALGORITHMS: dict[DetAlgorithm, Callable[[IntMatrix], int]] = {
    DetAlgorithm.BAREISS: det_bareiss,
    DetAlgorithm.COFACTOR: det_cofactor,
    DetAlgorithm.MODULAR: det_modular,
}


def det(m: IntMatrix, algorithm: DetAlgorithm = DetAlgorithm.BAREISS) -> int:
    return ALGORITHMS[algorithm](m)
