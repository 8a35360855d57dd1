import pytest

from gcoalg.errors import NotAGroup
from gcoalg.group import cyclic_group, direct_product, group_from_table, symmetric_group


def test_tables():
    assert group_from_table([[0]]).order == 1
    assert group_from_table([[0, 1], [1, 0]]) == cyclic_group(2)
    with pytest.raises(NotAGroup):
        group_from_table([[0, 1], [1, 1]])


def test_identity_not_at_zero():
    g = group_from_table([[1, 0], [0, 1]])
    assert g.identity == 1
    assert g.inv(0) == 0


def test_cyclic_and_inverse_involution():
    assert cyclic_group(3).inv(1) == 2
    for n in range(1, 13):
        g = cyclic_group(n)
        group_from_table(g.table)
        assert all(g.inv(g.inv(x)) == x for x in g)


def test_direct_products():
    z2, z3 = cyclic_group(2), cyclic_group(3)
    assert direct_product(cyclic_group(1), z3) == z3
    assert direct_product(z2, z2).order == 4
    p = direct_product(z2, z3)
    z6 = cyclic_group(6)
    relabel = {i * 3 + j: (i * 3 + j * 4) % 6 for i in range(2) for j in range(3)}
    assert all(relabel[p.mul(x, y)] == z6.mul(relabel[x], relabel[y]) for x in p for y in p)


def test_s3_is_nonabelian():
    s3 = symmetric_group(3)
    assert s3.order == 6 and not s3.is_abelian()
