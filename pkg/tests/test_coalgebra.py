import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gcoalg.coalgebra import (
    Coalgebra,
    RightComodule,
    comodule_hom_space,
    convolution_inverse,
    convolve,
    cotensor,
    dual_algebra,
    is_cocommutative,
    verify_coalgebra,
)
from gcoalg.errors import NotInvertible
from gcoalg.fixtures import c2gl, comatrix, ground
from gcoalg.linalg import Field, Matrix


def test_examples_verify(F3):
    assert verify_coalgebra(ground())
    assert verify_coalgebra(c2gl())
    assert verify_coalgebra(comatrix())
    bad = Coalgebra(F3, 2, c2gl().comult, Matrix.row(F3, [1, 0]))
    rep = verify_coalgebra(bad)
    assert {"check": "left counit", "basis": 1} in rep.failures


def test_duals():
    k = dual_algebra(ground())
    assert k.verify() and k.dim == 1
    d = dual_algebra(c2gl())
    assert d.verify()
    # pointwise product on two idempotents
    e1, e2 = Matrix.unit_column(d.mult.field, 2, 0), Matrix.unit_column(d.mult.field, 2, 1)
    assert d.multiply(e1, e1) == e1 and d.multiply(e1, e2).is_zero()
    mat = dual_algebra(comatrix())
    assert mat.verify()
    F = mat.mult.field
    e = [Matrix.unit_column(F, 4, i) for i in range(4)]
    # (e11 e12 e21 e22): matrix units multiply as e_ij e_jk = e_ik
    assert mat.multiply(e[1], e[2]) == e[0]
    assert mat.multiply(e[2], e[1]) == e[3]


def test_convolution_examples(F3):
    C = c2gl()
    row = lambda *v: Matrix.row(F3, v)
    u = row(2, 1)
    assert convolve(C, C.counit, u) == u
    assert convolve(C, row(1, 0), row(0, 1)) == row(0, 0)
    assert convolve(C, u, u) == row(1, 1)
    assert convolution_inverse(C, C.counit) == C.counit
    assert convolution_inverse(C, u) == u
    with pytest.raises(NotInvertible):
        convolution_inverse(C, row(1, 0))


def test_cotensor_examples(F3):
    C = c2gl()
    assert cotensor(C.as_right_comodule(), C.as_left_comodule()).cols == C.dim
    k = ground()
    N = RightComodule(k, 3, Matrix.identity(F3, 3))
    assert cotensor(N, k.as_left_comodule()).cols == 3
    Z = RightComodule(C, 0, Matrix.zeros(F3, 0, 0))
    assert cotensor(Z, C.as_left_comodule()).cols == 0


def test_hom_spaces(F3):
    C = c2gl()
    homs = comodule_hom_space(C.as_right_comodule(), C.as_right_comodule())
    assert len(homs) == 2
    k = ground()
    N = RightComodule(k, 2, Matrix.identity(F3, 2))
    assert len(comodule_hom_space(N, N)) == 4


def test_cocommutativity():
    assert is_cocommutative(ground())
    assert is_cocommutative(c2gl())
    assert not is_cocommutative(comatrix())


F5 = Field(5)
coalgebras = st.sampled_from([c2gl(F5), comatrix(2, F5), ground(F5)])


def functional(C, data):
    return Matrix.row(F5, data.draw(st.lists(st.integers(0, 4), min_size=C.dim, max_size=C.dim)))


@settings(max_examples=60, deadline=None)
@given(coalgebras, st.data())
def test_convolution_associative_unital(C, data):
    u, v, w = (functional(C, data) for _ in range(3))
    assert convolve(C, convolve(C, u, v), w) == convolve(C, u, convolve(C, v, w))
    assert convolve(C, C.counit, u) == u == convolve(C, u, C.counit)


@settings(max_examples=60, deadline=None)
@given(coalgebras, st.data())
def test_inverse_is_involutive(C, data):
    u = functional(C, data)
    try:
        v = convolution_inverse(C, u)
    except NotInvertible:
        return
    assert convolution_inverse(C, v) == u
