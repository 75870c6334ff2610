import random
from statistics import fmean

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import random_matrix
from detlab.det import det_bareiss
from detlab.errors import DimensionMismatch, InvalidRange
from detlab.fixture import PAPER_EXPONENTS, paper_fixture
from detlab.gen import (
    GENERATOR_ID,
    GenConfig,
    Prng,
    compose_big_matrix,
    default_exponents,
    derive_seed,
    gen_basic_matrix,
    generate,
    sample_uniform,
)
from detlab.matrix import IntMatrix

# published SplitMix64 reference outputs
SPLITMIX_VECTORS = {
    1234567: [
        6457827717110365317,
        3203168211198807973,
        9817491932198370423,
        4593380528125082431,
        16408922859458223821,
    ],
    0: [0xE220A8397B1DCDAF, 0x6E789E6AA1B965F4, 0x06C45D188009454F],
}


class ScriptedPrng:
    def __init__(self, outputs):
        self.outputs = list(outputs)

    def next_u64(self):
        return self.outputs.pop(0)


@pytest.mark.parametrize("seed", sorted(SPLITMIX_VECTORS))
def test_splitmix_reference_vectors(seed):
    p = Prng(seed)
    assert [p.next_u64() for _ in SPLITMIX_VECTORS[seed]] == SPLITMIX_VECTORS[seed]
    assert p.generator_id == GENERATOR_ID == "splitmix64"


def test_seed_must_be_u64():
    with pytest.raises(InvalidRange):
        Prng(-1)
    with pytest.raises(InvalidRange):
        Prng(2**64)


def test_singleton_range():
    p = Prng(99)
    assert all(sample_uniform(p, 5, 5) == 5 for _ in range(10))


def test_invalid_ranges():
    with pytest.raises(InvalidRange):
        sample_uniform(Prng(1), 3, 2)
    with pytest.raises(InvalidRange):
        sample_uniform(Prng(1), 0, 2**64)


def test_rejection_discards_biased_tail():
    # span 3: limit = 2**64 - (2**64 % 3) = 2**64 - 1
    p = ScriptedPrng([2**64 - 1, 2**64 - 2, 7])
    assert sample_uniform(p, 0, 2) == (2**64 - 2) % 3
    assert sample_uniform(p, 10, 12) == 10 + 7 % 3


def test_full_width_range_has_no_rejection():
    p = ScriptedPrng([2**64 - 1])
    assert sample_uniform(p, 0, 2**64 - 1) == 2**64 - 1


def test_uniform_mean_statistics():
    p = Prng(1)
    draws = [sample_uniform(p, -99, 99) for _ in range(100_000)]
    assert min(draws) == -99 and max(draws) == 99
    sd = ((199**2 - 1) / 12) ** 0.5
    assert abs(fmean(draws)) < 3 * sd / len(draws) ** 0.5


def test_same_seed_same_stream():
    a, b = Prng(5), Prng(5)
    assert [sample_uniform(a, -99, 99) for _ in range(500)] == [sample_uniform(b, -99, 99) for _ in range(500)]


def test_basic_matrix_examples():
    assert gen_basic_matrix(Prng(3), 1, (7, 7)) == IntMatrix.from_rows([[7]])
    m1 = gen_basic_matrix(Prng(42), 14, (-99, 99))
    m2 = gen_basic_matrix(Prng(42), 14, (-99, 99))
    assert m1 == m2
    assert all(-99 <= x <= 99 for x in m1.entries)


def test_basic_matrix_is_row_major():
    p = Prng(8)
    stream = [sample_uniform(p, -99, 99) for _ in range(9)]
    assert gen_basic_matrix(Prng(8), 3, (-99, 99)).entries == tuple(stream)


def test_compose_examples():
    assert compose_big_matrix(IntMatrix.identity(2), (0, 0), IntMatrix.zeros(2)) == IntMatrix.identity(2)
    assert compose_big_matrix(IntMatrix.from_rows([[1]]), (3,), IntMatrix.from_rows([[5]])) == IntMatrix.from_rows([[1005]])
    with pytest.raises(DimensionMismatch):
        compose_big_matrix(IntMatrix.identity(2), (1,), IntMatrix.zeros(2))
    with pytest.raises(DimensionMismatch):
        compose_big_matrix(IntMatrix.identity(2), (1, 1), IntMatrix.zeros(3))


@given(st.integers(1, 5).flatmap(lambda n: st.tuples(
    st.lists(st.integers(-99, 99), min_size=n * n, max_size=n * n),
    st.lists(st.integers(-999, 999), min_size=n * n, max_size=n * n),
    st.lists(st.integers(3, 60), min_size=n, max_size=n),
)))
def test_low_digits_are_small_matrix(data):
    basic_e, small_e, exponents = data
    n = len(exponents)
    basic, small = IntMatrix(n, n, tuple(basic_e)), IntMatrix(n, n, tuple(small_e))
    big = compose_big_matrix(basic, exponents, small)
    for j, e in enumerate(exponents):
        for i in range(n):
            assert (big[i, j] - small[i, j]) % 10**e == 0


def test_zero_small_matrix_scales_determinant():
    rng = random.Random(9)
    for n in (1, 3, 6):
        basic = random_matrix(rng, n, -99, 99)
        exps = PAPER_EXPONENTS[:n]
        big = compose_big_matrix(basic, exps, IntMatrix.zeros(n))
        assert det_bareiss(big) == det_bareiss(basic) * 10 ** sum(exps)


def test_fixture_verbatim_corners():
    basic, exponents, small = paper_fixture()
    assert (basic.rows, small.rows) == (14, 14)
    assert basic[0, 0] == -32
    assert basic[13, 13] == -84
    assert small[0, 0] == 528
    assert small[13, 13] == -805
    assert exponents == (123, 152, 185, 220, 397, 449, 503, 563, 979, 1059, 1143, 1229, 1319, 1412)
    assert all(-99 <= x <= 99 for x in basic.entries)
    assert all(-999 <= x <= 999 for x in small.entries)


def test_default_exponents():
    assert default_exponents(14) == PAPER_EXPONENTS
    assert default_exponents(3) == (123, 152, 185)
    assert default_exponents(16) == PAPER_EXPONENTS + (1505, 1598)


def test_gen_config_validation():
    assert GenConfig(seed=1).exponents == PAPER_EXPONENTS
    assert GenConfig(seed=1, n=2).exponents == (123, 152)
    with pytest.raises(DimensionMismatch):
        GenConfig(seed=1, n=2, exponents=(1, 2, 3))
    with pytest.raises(InvalidRange):
        GenConfig(seed=1, basic_range=(5, 4))
    with pytest.raises(InvalidRange):
        GenConfig(seed=1, n=1, exponents=(-1,))


def test_generate_reproducible_and_distinct():
    a = generate(GenConfig(seed=42, n=5))
    b = generate(GenConfig(seed=42, n=5))
    c = generate(GenConfig(seed=43, n=5))
    assert a == b
    assert a[2] != c[2]


def test_derive_seed_matches_stream():
    p = Prng(77)
    assert [derive_seed(77, i) for i in range(5)] == [p.next_u64() for _ in range(5)]
    assert len({derive_seed(7, i) for i in range(1000)}) == 1000
