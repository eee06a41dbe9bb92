from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from qinv.algebra import GF, QQ, ZZ, LinearSystem
from qinv.algebra.linalg import (
    express_in_span,
    kernel_from_echelon,
    left_kernel,
    rank_of,
    row_reduce,
)
from qinv.core.exceptions import ContractViolationError, UnsupportedOperationError


def small_matrices(max_value: int) -> st.SearchStrategy[list[list[int]]]:
    return st.integers(min_value=1, max_value=5).flatmap(
        lambda n_cols: st.lists(
            st.lists(
                st.integers(min_value=-max_value, max_value=max_value),
                min_size=n_cols,
                max_size=n_cols,
            ),
            min_size=1,
            max_size=6,
        )
    )


def test_row_reduce_mod_p() -> None:
    """
    Test the reduced echelon form over F3.
    """
    ech = row_reduce([[1, 2, 0], [2, 1, 0]], GF(3), 3)
    assert ech.rank == 1
    assert ech.pivots == [0]
    assert ech.rows == [[1, 2, 0]]
    assert ech.free_columns == [1, 2]


def test_row_reduce_rational() -> None:
    """
    Test the fraction-free elimination over QQ.
    """
    ech = row_reduce([[1, 2], [3, 4]], QQ, 2)
    assert ech.rows == [[1, 0], [0, 1]]
    ech = row_reduce([[2, 4, 6], [1, 2, 4]], QQ, 3)
    assert ech.pivots == [0, 2]
    assert ech.rows == [[1, 2, 0], [0, 0, 1]]
    ech = row_reduce([[Fraction(1, 2), Fraction(1, 3)]], QQ, 2)
    assert ech.rows == [[1, Fraction(2, 3)]]


def test_row_reduce_needs_a_field() -> None:
    with pytest.raises(UnsupportedOperationError):
        row_reduce([[1]], ZZ, 1)


def test_empty_matrix() -> None:
    ech = row_reduce([], GF(5), 3)
    assert ech.rank == 0
    assert len(kernel_from_echelon(ech, GF(5))) == 3


def test_linear_system_solve() -> None:
    """
    Test consistent and inconsistent right-hand sides.
    """
    system = LinearSystem(QQ, ["x", "y"])
    system.add_row({"x": 1, "y": 1})
    system.add_row({"x": 1, "y": -1})
    assert system.solve([3, 1]) == [2, 1]

    inconsistent = LinearSystem(QQ, ["x"])
    inconsistent.add_row({"x": 1})
    inconsistent.add_row({"x": 1})
    assert inconsistent.solve([1, 2]) is None
    assert inconsistent.solve([1, 1]) == [1]
    with pytest.raises(ContractViolationError):
        inconsistent.solve([1])


def test_linear_system_skips_zero_rows() -> None:
    system = LinearSystem(GF(3), ["a", "b"])
    system.add_row({"a": 3, "b": 0})
    assert system.n_rows == 0
    assert system.nullity() == 2


def test_free_variables_are_zero() -> None:
    """
    Test that solve returns the solution vanishing on the free columns.
    """
    system = LinearSystem(GF(3), ["a", "b", "c"])
    system.add_row({"a": 1, "c": 1})
    system.add_row({"b": 1, "c": 2})
    assert system.solve([1, 2]) == [1, 2, 0]


def test_left_kernel() -> None:
    kernel = left_kernel([[1, 0], [0, 1], [1, 1]], QQ, 2)
    assert kernel == [[1, 1, -1]]
    assert left_kernel([[1, 0], [0, 1]], GF(3), 2) == []


def test_express_in_span() -> None:
    """
    Test coordinates of a target vector in the span of others.
    """
    assert express_in_span([[1, 0], [0, 1]], [2, 3], QQ) == [2, 3]
    assert express_in_span([[1, 1]], [1, 0], QQ) is None
    assert express_in_span([[0, 0]], [0, 0], GF(3)) == [0]
    assert express_in_span([[1, 2, 0]], [2, 1, 0], GF(3)) == [2]


@settings(max_examples=50)
@given(rows=small_matrices(4), p=st.sampled_from((2, 3, 5, 32003)))
def test_rank_nullity_mod_p(rows: list[list[int]], p: int) -> None:
    """
    Test rank + nullity = columns and that kernel vectors are annihilated.

    Args:
        rows: Random integer matrix.
        p: Prime modulus.
    """
    ring = GF(p)
    n_cols = len(rows[0])
    ech = row_reduce(rows, ring, n_cols)
    kernel = kernel_from_echelon(ech, ring)
    assert ech.rank + len(kernel) == n_cols
    for vector in kernel:
        for row in rows:
            assert sum(a * b for a, b in zip(row, vector, strict=True)) % p == 0


@settings(max_examples=50)
@given(rows=small_matrices(20))
def test_rational_rank_matches_sympy(rows: list[list[int]]) -> None:
    """
    Test the rational rank against sympy.

    Args:
        rows: Random integer matrix.
    """
    n_cols = len(rows[0])
    assert rank_of(rows, QQ, n_cols) == sympy.Matrix(rows).rank()
    ech = row_reduce(rows, QQ, n_cols)
    expected, pivots = sympy.Matrix(rows).rref()
    assert ech.pivots == list(pivots)
    for i, row in enumerate(ech.rows):
        assert [Fraction(int(v.p), int(v.q)) for v in expected.row(i)] == row


@settings(max_examples=50)
@given(rows=small_matrices(3))
def test_proxy_prime_rank_matches_rational(rows: list[list[int]]) -> None:
    """
    Test that elimination over F_32003 agrees with QQ on small matrices.

    Entries of size at most 3 keep every minor below 32003 in absolute value.

    Args:
        rows: Random integer matrix.
    """
    n_cols = len(rows[0])
    modular = row_reduce(rows, GF(32003), n_cols)
    rational = row_reduce(rows, QQ, n_cols)
    assert modular.rank == rational.rank == sympy.Matrix(rows).rank()
    assert modular.pivots == rational.pivots
