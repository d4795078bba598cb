from fractions import Fraction

import pytest

from pathcoalg import linalg
from pathcoalg.fields import QQ, Field


def test_fp_arithmetic():
    F7 = Field(7)
    a, b = F7(3), F7(5)
    assert a + b == 1
    assert a * b == 1
    assert a / b == F7(3) * F7(3)
    assert -a == 4
    assert F7(Fraction(1, 2)) * 2 == 1
    with pytest.raises(ZeroDivisionError):
        a / F7(0)


def test_field_tags():
    assert Field.from_tag("q") == QQ
    assert Field.from_tag("fp:5") == Field(5)
    with pytest.raises(ValueError):
        Field(6)
    with pytest.raises(ValueError):
        Field.from_tag("r")


@pytest.mark.parametrize("field", [QQ, Field(2), Field(5)])
def test_rank_and_nullspace(field):
    a = [[1, 2, 3], [2, 4, 6], [1, 0, 1]]
    r = linalg.rank(a, field)
    ns = linalg.nullspace(a, 3, field)
    assert r + len(ns) == 3
    for v in ns:
        for row in a:
            assert sum(field(x) * y for x, y in zip(row, v)) == 0


def test_rank_depends_on_characteristic():
    a = [[1, 1], [1, -1]]
    assert linalg.rank(a, QQ) == 2
    assert linalg.rank(a, Field(2)) == 1


def test_solve():
    x = linalg.solve([[1, 1], [1, -1]], [3, 1], 2)
    assert x == [2, 1]
    assert linalg.solve([[1, 1], [2, 2]], [1, 3], 2) is None


def test_empty_products_stay_exact():
    a = linalg.zeros(2, 0)
    b = linalg.zeros(0, 3)
    m = linalg.matmul(a, b)
    assert m.shape == (2, 3)
    assert all(isinstance(x, Fraction) for x in m.flat)
