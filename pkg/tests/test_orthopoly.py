import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from detlab.det import det_bareiss
from detlab.errors import DegreeOutOfRange, FormatError
from detlab.gen import Prng
from detlab.matrix import IntMatrix
from detlab.orthopoly import (
    DiscreteMeasure,
    IntPolynomial,
    eval_poly,
    format_measure,
    hankel_det,
    inner_product,
    moments,
    orthogonal_poly,
    parse_measure,
    random_measure,
)

TWO_POINT = DiscreteMeasure((0, 1), (1, 1))
ONE_POINT = DiscreteMeasure((2,), (3,))


def measures(max_points=6):
    return st.integers(1, max_points).flatmap(
        lambda n: st.tuples(
            st.lists(st.integers(-30, 30), min_size=n, max_size=n, unique=True),
            st.lists(st.integers(1, 20), min_size=n, max_size=n),
        ).map(lambda t: DiscreteMeasure(tuple(sorted(t[0])), tuple(t[1])))
    )


def test_measure_invariants():
    with pytest.raises(ValueError):
        DiscreteMeasure((1, 1), (1, 1))
    with pytest.raises(ValueError):
        DiscreteMeasure((1, 0), (1, 1))
    with pytest.raises(ValueError):
        DiscreteMeasure((0,), (0,))
    with pytest.raises(ValueError):
        DiscreteMeasure((0, 1), (1,))
    with pytest.raises(ValueError):
        DiscreteMeasure((), ())


def test_moments_examples():
    assert moments(ONE_POINT, 2) == [3, 6, 12]
    assert moments(TWO_POINT, 3) == [2, 1, 1, 1]


def test_moments_against_double_loop():
    mu = random_measure(Prng(5), 5)
    expected = []
    for j in range(12):
        total = 0
        for a, w in zip(mu.nodes, mu.masses):
            total += w * a**j
        expected.append(total)
    assert moments(mu, 11) == expected


def test_hankel_examples():
    assert hankel_det(TWO_POINT, 0) == 1
    assert hankel_det(TWO_POINT, 1) == 2
    assert hankel_det(TWO_POINT, 2) == 1
    assert hankel_det(ONE_POINT, 2) == 0


def test_hankel_positive_up_to_support_size():
    for seed in range(10):
        mu = random_measure(Prng(seed), 4)
        assert all(hankel_det(mu, n) > 0 for n in range(1, 5))
        assert hankel_det(mu, 5) == 0


def test_orthogonal_poly_examples():
    assert orthogonal_poly(TWO_POINT, 0) == IntPolynomial((1,))
    assert orthogonal_poly(TWO_POINT, 1) == IntPolynomial((-1, 2))
    with pytest.raises(DegreeOutOfRange):
        orthogonal_poly(TWO_POINT, 2)
    with pytest.raises(DegreeOutOfRange):
        orthogonal_poly(TWO_POINT, -1)


def _gram_schmidt(mu, degree):
    """Monic orthogonal polynomials over the rationals, coefficients low to high."""

    def ip(p, q):
        return sum(
            w * sum(c * Fraction(a) ** i for i, c in enumerate(p)) * sum(c * Fraction(a) ** i for i, c in enumerate(q))
            for a, w in zip(mu.nodes, mu.masses)
        )

    basis = []
    for d in range(degree + 1):
        v = [Fraction(0)] * d + [Fraction(1)]
        for b in basis:
            coef = ip(v, b) / ip(b, b)
            for i, c in enumerate(b):
                v[i] -= coef * c
        basis.append(v)
    return basis


def test_degree_two_proportional_to_gram_schmidt():
    for seed in range(5):
        mu = random_measure(Prng(100 + seed), 4)
        monic = _gram_schmidt(mu, 3)
        for n in range(4):
            p = orthogonal_poly(mu, n)
            scale = Fraction(p.leading)
            assert scale > 0
            assert [Fraction(c) for c in p.coefficients] == [scale * c for c in monic[n]]


def test_eval_poly_examples():
    p = IntPolynomial((-1, 2))
    assert eval_poly(p, 1) == 1
    assert eval_poly(p, 0) == -1
    assert p(3) == 5


@given(st.lists(st.integers(-(10**12), 10**12), min_size=11, max_size=11), st.integers(-1000, 1000))
def test_eval_poly_against_power_sum(coeffs, x):
    assert eval_poly(IntPolynomial(tuple(coeffs)), x) == sum(c * x**i for i, c in enumerate(coeffs))


def test_polynomial_normalises_trailing_zeros():
    assert IntPolynomial((1, 2, 0, 0)).degree == 1
    assert IntPolynomial((0, 0)).degree == -1


def test_inner_product_examples():
    p0, p1 = orthogonal_poly(TWO_POINT, 0), orthogonal_poly(TWO_POINT, 1)
    assert inner_product(TWO_POINT, p1, p0) == 0
    assert inner_product(TWO_POINT, p0, p0) == moments(TWO_POINT, 0)[0]


@given(measures())
def test_orthogonality_and_norms(mu):
    n_points = len(mu)
    polys = [orthogonal_poly(mu, n) for n in range(n_points)]
    for n, p in enumerate(polys):
        assert p.degree == n
        assert p.leading == hankel_det(mu, n) > 0
        for m in range(n):
            assert inner_product(mu, p, polys[m]) == 0
        assert inner_product(mu, p, p) == hankel_det(mu, n) * hankel_det(mu, n + 1)


def test_degree_n_polynomial_vanishes_on_all_nodes():
    # the bordered determinant of degree N has the node polynomial as a factor
    mu = random_measure(Prng(4), 5)
    m = moments(mu, 9)
    for a in mu.nodes:
        rows = [m[i : i + 6] for i in range(5)] + [[a**j for j in range(6)]]
        assert det_bareiss(IntMatrix.from_rows(rows)) == 0


def test_random_measure_ranges():
    mu = random_measure(Prng(1), 10)
    assert len(mu) == 10
    assert all(-50 <= a <= 50 for a in mu.nodes)
    assert all(1 <= w <= 20 for w in mu.masses)
    assert random_measure(Prng(1), 10) == mu
    with pytest.raises(ValueError):
        random_measure(Prng(1), 5, node_range=(0, 3))


def test_measure_format_round_trip():
    mu = DiscreteMeasure((-3, 0, 7), (2, 1, 5))
    text = format_measure(mu)
    assert text == "detlab-measure v1\npoints 3\n-3 2\n0 1\n7 5\n"
    assert parse_measure(text) == mu


@pytest.mark.parametrize(
    "text",
    [
        "detlab-measure v1\npoints 2\n0 1\n",
        "detlab-measure v1\npoints 1\n0\n",
        "detlab-measure v1\npoints 2\n1 1\n0 1\n",
        "detlab-measure v1\npoints 1\n0 0\n",
        "detlab-measure v0\npoints 1\n0 1\n",
        "detlab-measure v1\npoints x\n",
    ],
)
def test_measure_parse_rejects(text):
    with pytest.raises(FormatError):
        parse_measure(text)
