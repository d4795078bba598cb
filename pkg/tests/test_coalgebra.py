import random
from collections import Counter

import pytest

from oracles import random_quiver, random_shape
from pathcoalg.coalgebra import PathVector, coradical_layer, counit, counit_vector, delta, delta_vector
from pathcoalg.errors import NotInShape
from pathcoalg.fields import Field
from pathcoalg.paths import all_paths
from pathcoalg.quiver import compose, loop, thick, two_arrows
from pathcoalg.shape import MonomialShape


def test_delta_examples():
    q = two_arrows()
    s = MonomialShape.full(q)
    ea = q.trivial("a")
    assert delta(s, ea) == [(ea, ea, 1)]
    x = q.path("x")
    assert delta(s, x) == [(ea, x, 1), (x, q.trivial("b"), 1)]
    xy = q.path("x y")
    assert delta(s, xy) == [(ea, xy, 1), (x, q.path("y"), 1), (xy, q.trivial("c"), 1)]


def test_delta_outside_shape():
    lq = loop()
    with pytest.raises(NotInShape):
        delta(MonomialShape.forbid(lq, ["x x"]), lq.path("x x"))


def test_counit_examples():
    q = two_arrows()
    assert counit(q.trivial("a")) == 1
    assert counit(q.path("x")) == 0
    assert counit(q.path("x y")) == 0


def test_coradical_layers():
    q = two_arrows()
    s = MonomialShape.full(q)
    c0 = [p for ps in coradical_layer(s, 0).values() for p in ps]
    assert sorted(c0) == sorted(q.trivial(v) for v in "abc")
    lq = loop()
    c2 = [str(p) for ps in coradical_layer(MonomialShape.full(lq), 2).values() for p in ps]
    assert c2 == ["e_u", "x.0", "x.0 x.0"]
    t = MonomialShape.full(thick())
    c1 = sorted(str(p) for ps in coradical_layer(t, 1, omega_bound=3).values() for p in ps)
    assert c1 == ["e_a", "e_b", "x.0", "x.1", "x.2"]


def test_pathvector_arithmetic():
    q = two_arrows()
    s = MonomialShape.full(q)
    v = PathVector(s, {q.trivial("a"): 1, q.path("x y"): 2})
    assert (v - v) == {}
    assert counit_vector(v) == 1
    t = delta_vector(v)
    assert t[(q.path("x"), q.path("y"))] == 2
    assert PathVector(s, {q.path("x"): 3}, Field(3)) == {}


def _coassoc_and_counit(shape, p):
    left = Counter()
    right = Counter()
    for q, r, _ in delta(shape, p):
        for a, b, _ in delta(shape, q):
            left[(a, b, r)] += 1
        for a, b, _ in delta(shape, r):
            right[(q, a, b)] += 1
    assert left == right
    # counit contracted on either side gives p back
    assert [r for q, r, _ in delta(shape, p) if counit(q) == 1] == [p]
    assert [q for q, r, _ in delta(shape, p) if counit(r) == 1] == [p]
    for q, r, _ in delta(shape, p):
        assert shape.contains(q) and shape.contains(r)
        assert len(q) + len(r) == len(p)
        assert compose(q, r) == p


@pytest.mark.parametrize("seed", range(10))
def test_coalgebra_axioms_random(seed):
    rng = random.Random(seed)
    shape = random_shape(rng, random_quiver(rng, max_vertices=4, max_bundles=5))
    for p in all_paths(shape, 5):
        _coassoc_and_counit(shape, p)
