"""Orthogonal polynomials of finite discrete measures with integer data.

For ``mu = sum_i M_i * delta(a_i)`` the polynomial of degree ``n`` is taken in
determinantal form::

            | m_0      m_1      ...  m_n      |
    P_n  =  | ...                             |
            | m_{n-1}  m_n      ...  m_{2n-1} |
            | 1        x        ...  x^n      |

so coefficients are integers and the leading coefficient is the Hankel
determinant ``det(m_{i+j})_{i,j<n}``, positive while ``n < N``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path

from .det import det_bareiss
from .errors import DegreeOutOfRange, FormatError
from .gen import Prng, sample_uniform
from .matrix import IntMatrix, parse_decimal

MEASURE_HEADER = "detlab-measure v1"


@dataclass(frozen=True)
class DiscreteMeasure:
    nodes: tuple[int, ...]
    masses: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "nodes", tuple(self.nodes))
        object.__setattr__(self, "masses", tuple(self.masses))
        if not self.nodes:
            raise ValueError("a measure needs at least one node")
        if len(self.nodes) != len(self.masses):
            raise ValueError(f"{len(self.nodes)} nodes but {len(self.masses)} masses")
        if any(b <= a for a, b in zip(self.nodes, self.nodes[1:])):
            raise ValueError("nodes must be strictly increasing")
        if any(m < 1 for m in self.masses):
            raise ValueError("masses must be positive integers")

    def __len__(self) -> int:
        return len(self.nodes)

    def describe(self) -> dict:
        return {"nodes": list(self.nodes), "masses": list(self.masses)}


@dataclass(frozen=True)
class IntPolynomial:
    """Dense integer coefficients, ``coefficients[j]`` multiplies ``x**j``."""

    coefficients: tuple[int, ...]

    def __post_init__(self) -> None:
        coeffs = list(self.coefficients)
        while len(coeffs) > 1 and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coefficients", tuple(coeffs) or (0,))

    @property
    def degree(self) -> int:
        """Degree, with ``-1`` for the zero polynomial."""
        if self.coefficients == (0,):
            return -1
        return len(self.coefficients) - 1

    @property
    def leading(self) -> int:
        return self.coefficients[-1]

    def __call__(self, x: int) -> int:
        return eval_poly(self, x)


def eval_poly(p: IntPolynomial, x: int) -> int:
    acc = 0
    for c in reversed(p.coefficients):
        acc = acc * x + c
    return acc


def moments(mu: DiscreteMeasure, upto: int) -> list[int]:
    """``[sum_i M_i * a_i**j for j in 0..upto]``."""
    out = []
    powers = list(mu.masses)
    for _ in range(upto + 1):
        out.append(sum(powers))
        powers = [w * a for w, a in zip(powers, mu.nodes)]
    return out


def hankel_det(mu: DiscreteMeasure, n: int) -> int:
    """``det(m_{i+j})_{i,j<n}``; equals 1 for ``n == 0``."""
    if n == 0:
        return 1
    m = moments(mu, 2 * n - 2)
    return det_bareiss(IntMatrix(n, n, tuple(m[i + j] for i in range(n) for j in range(n))))


@lru_cache(maxsize=4096)
def orthogonal_poly(mu: DiscreteMeasure, n: int) -> IntPolynomial:
    if not 0 <= n < len(mu):
        raise DegreeOutOfRange(f"degree {n} needs 0 <= n <= {len(mu) - 1} for {len(mu)} nodes")
    if n == 0:
        return IntPolynomial((1,))
    m = moments(mu, 2 * n - 1)
    block = [m[i : i + n + 1] for i in range(n)]
    coeffs = []
    for j in range(n + 1):
        minor = IntMatrix.from_rows([row[:j] + row[j + 1 :] for row in block])
        # cofactor sign of entry (n, j) in an (n+1)x(n+1) determinant
        coeffs.append((-1) ** (n + j) * det_bareiss(minor))
    return IntPolynomial(tuple(coeffs))


def inner_product(mu: DiscreteMeasure, p: IntPolynomial, q: IntPolynomial) -> int:
    return sum(w * eval_poly(p, a) * eval_poly(q, a) for a, w in zip(mu.nodes, mu.masses))


def random_measure(
    prng: Prng,
    n_points: int,
    node_range: tuple[int, int] = (-50, 50),
    mass_range: tuple[int, int] = (1, 20),
) -> DiscreteMeasure:
    """Distinct sorted nodes drawn uniformly from ``node_range``, masses from ``mass_range``."""
    lo, hi = node_range
    if hi - lo + 1 < n_points:
        raise ValueError(f"cannot draw {n_points} distinct nodes from [{lo}, {hi}]")
    nodes: set[int] = set()
    while len(nodes) < n_points:
        nodes.add(sample_uniform(prng, lo, hi))
    masses = [sample_uniform(prng, *mass_range) for _ in range(n_points)]
    return DiscreteMeasure(tuple(sorted(nodes)), tuple(masses))


def format_measure(mu: DiscreteMeasure) -> str:
    lines = [MEASURE_HEADER, f"points {len(mu)}"]
    lines.extend(f"{a} {w}" for a, w in zip(mu.nodes, mu.masses))
    return "\n".join(lines) + "\n"


def parse_measure(text: str) -> DiscreteMeasure:
    lines = text.splitlines()
    while lines and lines[-1] == "":
        lines.pop()
    if not lines or lines[0] != MEASURE_HEADER:
        raise FormatError(f"line 1: expected {MEASURE_HEADER!r}")
    head = lines[1].split(" ") if len(lines) > 1 else []
    if len(head) != 2 or head[0] != "points" or not head[1].isdigit():
        raise FormatError("line 2: expected 'points N'")
    count = int(head[1])
    if len(lines) != count + 2:
        raise FormatError(f"expected {count} points, found {len(lines) - 2}")
    nodes, masses = [], []
    for lineno, line in enumerate(lines[2:], start=3):
        parts = line.split(" ")
        if len(parts) != 2:
            raise FormatError(f"line {lineno}: expected 'a_i M_i', got {line!r}")
        a, w = (parse_decimal(t, lineno) for t in parts)
        nodes.append(a)
        masses.append(w)
    try:
        return DiscreteMeasure(tuple(nodes), tuple(masses))
    except ValueError as exc:
        raise FormatError(str(exc)) from None


def read_measure(path: str | Path) -> DiscreteMeasure:
    return parse_measure(Path(path).read_text(encoding="ascii"))


def write_measure(mu: DiscreteMeasure, path: str | Path) -> None:
    Path(path).write_text(format_measure(mu), encoding="ascii")

