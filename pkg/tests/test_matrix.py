from decimal import Decimal

import pytest
from hypothesis import given
from hypothesis import strategies as st

from detlab.errors import DimensionMismatch, FormatError
from detlab.fixture import paper_fixture
from detlab.matrix import (
    IntMatrix,
    digit_count,
    format_matrix,
    mat_add,
    mat_mul,
    parse_matrix,
    read_matrix,
    render_sci,
    write_matrix,
)

matrices = st.integers(1, 5).flatmap(
    lambda r: st.integers(1, 5).flatmap(
        lambda c: st.lists(st.integers(-(10**40), 10**40), min_size=r * c, max_size=r * c).map(
            lambda xs: IntMatrix(r, c, tuple(xs))
        )
    )
)


def test_shape_invariants():
    with pytest.raises(DimensionMismatch):
        IntMatrix(2, 2, (1, 2, 3))
    with pytest.raises(DimensionMismatch):
        IntMatrix(0, 1, ())
    with pytest.raises(DimensionMismatch):
        IntMatrix.from_rows([[1, 2], [3]])


def test_mat_mul_identity_and_column_scaling():
    x = IntMatrix.from_rows([[1, 2], [3, 4]])
    assert mat_mul(IntMatrix.identity(2), x) == x
    assert mat_mul(x, IntMatrix.diagonal([10, 100])) == IntMatrix.from_rows([[10, 200], [30, 400]])
    with pytest.raises(DimensionMismatch):
        mat_mul(x, IntMatrix.zeros(3))


def test_mat_add():
    x = IntMatrix.from_rows([[1, -2], [3, 4]])
    assert mat_add(x, IntMatrix.zeros(2)) == x
    assert mat_add(IntMatrix.from_rows([[1]]), IntMatrix.from_rows([[5]])) == IntMatrix.from_rows([[6]])
    with pytest.raises(DimensionMismatch):
        mat_add(x, IntMatrix.zeros(2, 3))


def test_fixture_product_and_sum():
    basic, exponents, small = paper_fixture()
    powers = IntMatrix.diagonal([10**e for e in exponents])
    scaled = mat_mul(basic, powers)
    assert scaled[0, 0] == -32 * 10**123
    assert scaled[0, 1] == 69 * 10**152
    big = mat_add(scaled, small)
    assert big[0, 0] == -32 * 10**123 + 528


def test_format_exact_layout():
    m = IntMatrix.from_rows([[1, -2], [30, 0]])
    assert format_matrix(m) == "detlab-matrix v1\nrows 2 cols 2\n1 -2\n30 0\n"


@given(matrices)
def test_format_round_trip(m):
    assert parse_matrix(format_matrix(m)) == m


def test_file_round_trip_big_entries(tmp_path):
    basic, exponents, small = paper_fixture()
    big = mat_add(mat_mul(basic, IntMatrix.diagonal([10**e for e in exponents])), small)
    write_matrix(big, tmp_path / "big.txt")
    assert read_matrix(tmp_path / "big.txt") == big


@pytest.mark.parametrize(
    "text",
    [
        "",
        "detlab-matrix v2\nrows 1 cols 1\n1\n",
        "detlab-matrix v1\nrows 1 cols 1\n",
        "detlab-matrix v1\nrows 1 cols 2\n1\n",
        "detlab-matrix v1\nrows 1 cols 1\n+1\n",
        "detlab-matrix v1\nrows 1 cols 1\n1.5\n",
        "detlab-matrix v1\nrows 1 cols 2\n1  2\n",
        "detlab-matrix v1\nrows 0 cols 1\n",
        "detlab-matrix v1\nrows 1 cols 1\n1_0\n",
    ],
)
def test_parse_rejects(text):
    with pytest.raises(FormatError):
        parse_matrix(text)


@pytest.mark.parametrize(
    "value, expected",
    [
        (0, "0e0"),
        (1, "1e0"),
        (-2, "-2e0"),
        (15, "1.5e1"),
        (1000, "1e3"),
        (123456789012345, "1.23456789012345e14"),
        (1234567890123456, "1.23456789012346e15"),
        # ties round to even in the 15th significant digit
        (1000000000000025, "1.00000000000002e15"),
        (1000000000000035, "1.00000000000004e15"),
        (1000000000000025001, "1.00000000000003e18"),
        (9999999999999999, "1e16"),
        (-(10**9762) * 195124219131987, "-1.95124219131987e9776"),
    ],
)
def test_render_sci(value, expected):
    assert render_sci(value) == expected


@given(st.integers(-(10**60), 10**60).filter(bool))
def test_render_sci_matches_decimal_formatting(value):
    # independent route: Decimal's own scientific formatting at 15 significant digits
    text = f"{Decimal(value):.14e}"
    mantissa, exponent = text.split("e")
    mantissa = mantissa.rstrip("0").rstrip(".")
    assert render_sci(value) == f"{mantissa}e{int(exponent)}"


def test_digit_count():
    assert digit_count(0) == 1
    assert digit_count(-10**5000) == 5001
