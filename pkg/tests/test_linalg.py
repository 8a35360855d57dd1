from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gcoalg.errors import NoSolution
from gcoalg.linalg import Field, Matrix, kernel_basis, kron, rank, solve_right, swap_matrix


def M(F, rows):
    return Matrix.from_rows(F, rows)


def test_field_parsing_and_primality():
    assert Field.parse("F5") == Field(5) == Field.parse("GF(5)") == Field.parse(5)
    assert Field.parse("Q") == Field()
    with pytest.raises(ValueError):
        Field(6)


def test_scalar_format_roundtrip(Q, F3):
    assert Q.format(Fraction(-2, 4)) == "-1/2"
    assert Q.format(3) == "3/1"
    assert F3.format(5) == "2 mod 3"
    assert F3.parse_scalar("2 mod 3") == 2
    assert Q.parse_scalar("-1/2") == Fraction(-1, 2)
    with pytest.raises(ValueError):
        F3.parse_scalar("1 mod 5")


def test_kernel_examples(Q, F3):
    assert kernel_basis(Matrix.zeros(F3, 1, 1)) == Matrix.identity(F3, 1)
    assert kernel_basis(Matrix.identity(Q, 2)).shape == (2, 0)
    k = kernel_basis(M(Q, [[1, 2], [2, 4]]))
    assert k.shape == (2, 1)
    # spans (-2, 1)
    assert k[0, 0] == -2 * k[1, 0]


def test_rank_examples(Q):
    assert rank(Matrix.zeros(Q, 3, 3)) == 0
    assert rank(Matrix.identity(Q, 4)) == 4
    assert rank(M(Q, [[1, 2], [2, 4]])) == 1


def test_kron_examples(Q, F3):
    assert kron(Matrix.identity(Q, 2), Matrix.identity(Q, 3)) == Matrix.identity(Q, 6)
    a = M(Q, [[1, 2], [3, 4]])
    assert kron(a, Matrix.identity(Q, 1)) == a
    assert kron(M(F3, [[2]]), M(F3, [[0, 1], [1, 0]])) == M(F3, [[0, 2], [2, 0]])


def test_solve_examples(Q):
    b = M(Q, [[1], [7]])
    assert solve_right(Matrix.identity(Q, 2), b) == b
    z = Matrix.zeros(Q, 2, 1)
    assert solve_right(Matrix.zeros(Q, 2, 2), z) == z
    with pytest.raises(NoSolution):
        solve_right(M(Q, [[1, 2], [2, 4]]), M(Q, [[1], [3]]))


def test_swap_matrix_flips_tensors(Q):
    u = Matrix.column(Q, [1, 2])
    v = Matrix.column(Q, [3, 4, 5])
    assert swap_matrix(Q, 2, 3) @ kron(u, v) == kron(v, u)


def test_inverse_and_det(F3):
    a = M(F3, [[1, 1], [0, 2]])
    assert a @ a.inverse() == Matrix.identity(F3, 2)
    with pytest.raises(ZeroDivisionError):
        M(F3, [[1, 2], [2, 1]]).inverse()


small = st.integers(-4, 4)


def matrices(rows, cols):
    return st.lists(st.lists(small, min_size=cols, max_size=cols), min_size=rows, max_size=rows)


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 4), st.integers(1, 4), st.data(), st.sampled_from([None, 2, 5]))
def test_rank_nullity_and_kernel(r, c, data, p):
    F = Field(p)
    m = M(F, data.draw(matrices(r, c)))
    k = kernel_basis(m)
    assert (m @ k).is_zero()
    assert rank(m) + k.cols == c


@settings(max_examples=40, deadline=None)
@given(matrices(2, 2), matrices(1, 3), matrices(2, 1))
def test_kron_associative(a, b, c):
    Q = Field()
    a, b, c = M(Q, a), M(Q, b), M(Q, c)
    assert kron(kron(a, b), c) == kron(a, kron(b, c))


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 4), st.integers(1, 4), st.data())
def test_solve_right_is_exact(r, c, data):
    Q = Field()
    a = M(Q, data.draw(matrices(r, c)))
    x0 = M(Q, data.draw(matrices(c, 1)))
    b = a @ x0
    assert a @ solve_right(a, b) == b
