import random
from math import isqrt, prod

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import leibniz_det, random_matrix
from detlab.det import (
    COFACTOR_MAX_N,
    DetAlgorithm,
    crt_symmetric,
    det,
    det_bareiss,
    det_cofactor,
    det_mod_p,
    det_modular,
    hadamard_bound,
    primes_for_bound,
)
from detlab.errors import NotSquare, PrimePoolExhausted, TooLargeForCofactor
from detlab.matrix import IntMatrix, mat_mul, scale_columns
from detlab.primes import PRIME_POOL

ALL = (det_bareiss, det_cofactor, det_modular)


def square_of(n, bound=10**6):
    return st.lists(st.integers(-bound, bound), min_size=n * n, max_size=n * n).map(
        lambda xs: IntMatrix(n, n, tuple(xs))
    )


def square(max_n=5, bound=10**6):
    return st.integers(1, max_n).flatmap(lambda n: square_of(n, bound))


@pytest.mark.parametrize("fn", ALL)
def test_small_examples(fn):
    assert fn(IntMatrix.identity(3)) == 1
    assert fn(IntMatrix.identity(4)) == 1
    assert fn(IntMatrix.from_rows([[1, 2], [3, 4]])) == -2
    assert fn(IntMatrix.from_rows([[3, 4], [0, 5]])) == 15
    assert fn(IntMatrix.from_rows([[-7]])) == -7
    assert fn(IntMatrix.zeros(3)) == 0


@pytest.mark.parametrize("fn", ALL)
def test_not_square(fn):
    with pytest.raises(NotSquare):
        fn(IntMatrix.zeros(2, 3))


def test_cofactor_cap():
    det_cofactor(IntMatrix.identity(COFACTOR_MAX_N))
    with pytest.raises(TooLargeForCofactor):
        det_cofactor(IntMatrix.identity(COFACTOR_MAX_N + 1))


def test_bareiss_needs_row_swaps():
    m = IntMatrix.from_rows([[0, 1, 2], [0, 0, 3], [4, 5, 6]])
    assert det_bareiss(m) == leibniz_det(m) == 12
    singular_column = IntMatrix.from_rows([[1, 0, 2], [3, 0, 4], [5, 0, 6]])
    assert det_bareiss(singular_column) == 0


def test_six_by_six_against_permutation_oracle():
    rng = random.Random(6)
    for _ in range(20):
        m = random_matrix(rng, 6)
        expected = leibniz_det(m)
        assert det_bareiss(m) == expected
        assert det_cofactor(m) == expected
        assert det_modular(m) == expected


def test_pairwise_equivalence_1000_cases():
    rng = random.Random(1000)
    for _ in range(1000):
        m = random_matrix(rng, rng.randint(1, 7))
        b = det_bareiss(m)
        assert det_cofactor(m) == b
        assert det_modular(m) == b


def test_low_rank_matrices():
    rng = random.Random(3)
    for n in range(2, 7):
        m = random_matrix(rng, n, -9, 9)
        rows = m.to_rows()
        rows[-1] = [2 * a - 3 * b for a, b in zip(rows[0], rows[1 % n])]
        m = IntMatrix.from_rows(rows)
        assert det_bareiss(m) == det_cofactor(m) == det_modular(m) == leibniz_det(m)


def test_dispatch():
    m = IntMatrix.from_rows([[2, 1], [1, 2]])
    assert {det(m, a) for a in DetAlgorithm} == {3}


# --- Hadamard bound and modular machinery ----------------------------------


def test_hadamard_examples():
    assert hadamard_bound(IntMatrix.identity(2)) == 1
    m = IntMatrix.from_rows([[3, 4], [0, 5]])
    assert hadamard_bound(m) == 25
    assert abs(det_bareiss(m)) <= 25
    # not a perfect square: 2 * 5 = 10 -> ceil(sqrt(10)) = 4
    assert hadamard_bound(IntMatrix.from_rows([[1, 1], [1, 2]])) == 4


def test_hadamard_bounds_200_random():
    rng = random.Random(200)
    for _ in range(200):
        m = random_matrix(rng, rng.randint(1, 6))
        bound = hadamard_bound(m)
        squared = prod(sum(x * x for x in m.row(i)) for i in range(m.rows))
        assert bound * bound >= squared
        assert bound == 0 or (bound - 1) ** 2 < squared
        assert abs(det_bareiss(m)) <= bound


def test_prime_pool_is_the_largest_primes_below_2_31():
    sympy = pytest.importorskip("sympy")
    assert len(PRIME_POOL) == len(set(PRIME_POOL)) == 4096
    expected = []
    p = 2**31
    while len(expected) < len(PRIME_POOL):
        p = sympy.prevprime(p)
        expected.append(p)
    assert list(PRIME_POOL) == expected


def test_primes_for_bound_is_minimal():
    for bound in (0, 1, 2**40, 10**500):
        primes = primes_for_bound(bound)
        assert prod(primes) > 2 * bound + 1
        assert prod(primes[:-1]) <= 2 * bound + 1


def test_prime_pool_exhausted_reports_bits():
    huge = IntMatrix.diagonal([10**10000, 10**10000, 10**10000, 10**10000])
    with pytest.raises(PrimePoolExhausted) as info:
        det_modular(huge)
    assert info.value.required_bits > info.value.available_bits


def test_det_mod_p_matches_exact_reduction():
    rng = random.Random(11)
    p = PRIME_POOL[0]
    for _ in range(50):
        m = random_matrix(rng, rng.randint(1, 6))
        assert det_mod_p([x % p for x in m.entries], m.rows, p) == leibniz_det(m) % p


def test_symmetric_lift_recovers_sign():
    primes = PRIME_POOL[:3]
    for value in (-5, 0, 7, -(prod(primes) // 2) + 1, prod(primes) // 2):
        assert crt_symmetric([value % p for p in primes], primes) == value


def test_modular_reconstruction_is_order_independent():
    rng = random.Random(5)
    m = random_matrix(rng, 5, -(10**30), 10**30)
    primes = list(primes_for_bound(hadamard_bound(m)))
    residues = [leibniz_det(m) % p for p in primes]
    pairs = list(zip(residues, primes))
    rng.shuffle(pairs)
    assert crt_symmetric([r for r, _ in pairs], tuple(p for _, p in pairs)) == det_modular(m)


# --- algebraic identities (property tests) ---------------------------------


@given(square())
def test_transpose(m):
    assert det_bareiss(m.transpose()) == det_bareiss(m)


@given(square(), st.data())
def test_row_swap_negates(m, data):
    if m.rows < 2:
        return
    i, j = data.draw(st.lists(st.integers(0, m.rows - 1), min_size=2, max_size=2, unique=True))
    assert det_bareiss(m.swap_rows(i, j)) == -det_bareiss(m)


@given(st.integers(1, 5).flatmap(lambda n: st.tuples(square_of(n, 10**4), square_of(n, 10**4))))
def test_multiplicative(pair):
    a, b = pair
    assert det_bareiss(mat_mul(a, b)) == det_bareiss(a) * det_bareiss(b)


@given(square(6, 99), st.lists(st.integers(0, 400), min_size=6, max_size=6))
def test_diagonal_power_scaling(m, exponents):
    exps = exponents[: m.rows]
    scaled = scale_columns(m, [10**e for e in exps])
    assert det_bareiss(scaled) == det_bareiss(m) * 10 ** sum(exps)


@given(square(6, 10**20))
def test_hadamard_property(m):
    assert abs(det_bareiss(m)) <= hadamard_bound(m)


@settings(max_examples=50)
@given(square(6, 10**12))
def test_three_algorithms_agree(m):
    assert det_bareiss(m) == det_cofactor(m) == det_modular(m)


@given(square(5))
def test_repeated_evaluation_is_bit_identical(m):
    assert det_bareiss(m) == det_bareiss(m)
    assert det_modular(m) == det_modular(m)
