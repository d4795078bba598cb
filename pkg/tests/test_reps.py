import random

import pytest
from hypothesis import given, settings, strategies as st

from oracles import random_comodule, random_quiver, random_shape
from pathcoalg import linalg
from pathcoalg.errors import NotAComodule, NotHereditary, RepresentationMismatch, UninstantiatedOmega
from pathcoalg.fields import QQ, Field
from pathcoalg.quiver import Quiver, loop, single_arrow, thick, two_arrows
from pathcoalg.reps import (
    LEFT,
    RIGHT,
    Representation,
    assemble_extension,
    direct_sum,
    euler_pairing,
    ext1,
    hom,
    injective_trunc,
    is_coboundary,
    is_comodule,
    loewy,
    quotient_by_socle,
    sequence_check_thick,
    side_flip,
    simple,
    socle,
)
from pathcoalg.shape import MonomialShape


def mat(rows):
    return linalg.as_matrix(rows, QQ)


def test_simple():
    s = MonomialShape.full(single_arrow())
    m = simple(s, "a")
    assert m.dims == {"a": 1, "b": 0} and m.act == {}
    assert is_comodule(s, m)


def test_injective_trunc_shapes():
    s = MonomialShape.full(two_arrows())
    e = injective_trunc(s, "a", RIGHT, 2)
    assert e.dims == {"a": 1, "b": 1, "c": 1}
    assert is_comodule(s, e)
    left = injective_trunc(s, "c", LEFT, 2)
    assert left.dims == {"a": 1, "b": 1, "c": 1}
    assert is_comodule(s, left)
    whole = injective_trunc(s, "a")
    assert whole.dims == e.dims


def test_is_comodule_rejections():
    lq = loop()
    full = MonomialShape.full(lq)
    jordan3 = Representation(full, RIGHT, {"u": 3}, {"x": mat([[0, 1, 0], [0, 0, 1], [0, 0, 0]])})
    assert is_comodule(full, jordan3)
    forb = MonomialShape.forbid(lq, ["x x"])
    chk = is_comodule(forb, jordan3)
    assert not chk and chk.witness == lq.path("x x")
    ident = Representation(full, RIGHT, {"u": 1}, {"x": mat([[1]])})
    assert not is_comodule(full, ident)
    with pytest.raises(NotAComodule):
        socle(ident)


def test_matrix_shape_checked():
    s = MonomialShape.full(single_arrow())
    with pytest.raises(RepresentationMismatch):
        Representation(s, RIGHT, {"a": 1, "b": 1}, {"x": mat([[1, 0]])})


def test_socle_and_loewy_of_chain():
    s = MonomialShape.full(two_arrows())
    e = injective_trunc(s, "a", RIGHT, 2)
    assert socle(e).dims == {"a": 1, "b": 0, "c": 0}
    f = loewy(e)
    assert f.loewy_length == 3
    assert f.layers[0] == {"a": 1, "b": 0, "c": 0}
    assert f.layers[-1] == e.dims


def test_hom_examples():
    s = MonomialShape.full(single_arrow())
    sa, sb = simple(s, "a"), simple(s, "b")
    assert hom(sa, sa).dim == 1
    assert hom(sa, sb).dim == 0
    e = injective_trunc(s, "a", RIGHT, 1)
    assert hom(sa, e).dim == 1  # the socle inclusion
    assert hom(sb, e).dim == 0
    assert hom(e, sb).dim == 1


def test_ext1_examples():
    s = MonomialShape.full(single_arrow())
    sa, sb = simple(s, "a"), simple(s, "b")
    assert ext1(s, sb, sa).dim == 1
    assert ext1(s, sa, sb).dim == 0
    lq = loop()
    forb = MonomialShape.forbid(lq, ["x x"])
    su = simple(forb, "u")
    assert ext1(forb, su, su).dim == 1
    with pytest.raises(UninstantiatedOmega):
        t = MonomialShape.full(thick())
        ext1(t, simple(t, "a"), simple(t, "b"))


def test_ext1_accounts_for_relations():
    # on a loop with x x forbidden, the injective hull of u is uniserial of length 2
    lq = loop()
    forb = MonomialShape.forbid(lq, ["x x"])
    e = injective_trunc(forb, "u")
    assert e.dims == {"u": 2}
    su = simple(forb, "u")
    assert ext1(forb, su, e).dim == 0
    full = MonomialShape.full(lq)
    assert ext1(full, simple(full, "u"), injective_trunc(full, "u", RIGHT, 1)).dim == 1


def test_euler_examples():
    s = MonomialShape.full(thick(3))
    sa, sb = simple(s, "a"), simple(s, "b")
    assert euler_pairing(s, sb, sa) == -3
    assert euler_pairing(s, sa, sa) == 1
    with pytest.raises(NotHereditary):
        euler_pairing(MonomialShape.full(loop()), simple(MonomialShape.full(loop()), "u"), simple(MonomialShape.full(loop()), "u"))


@pytest.mark.parametrize("n", [1, 2, 3])
def test_thick_sequence(n):
    chk = sequence_check_thick(n)
    assert chk.ok
    assert chk.summary() == f"ext1(T,S)={n} ext1(T,E)=0 identity OK"


def test_side_flip_involution():
    s = MonomialShape.full(two_arrows())
    e = injective_trunc(s, "a", RIGHT, 2)
    back = side_flip(side_flip(e))
    assert back.side == RIGHT and back.dims == e.dims
    assert all((back.act[a] == e.act[a]).all() for a in e.act)
    assert is_comodule(s, side_flip(e))


def test_extension_of_cocycle_is_comodule():
    s = MonomialShape.full(single_arrow())
    sa, sb = simple(s, "a"), simple(s, "b")
    res = ext1(s, sb, sa)
    e = assemble_extension(sb, sa, res.cocycles[0])
    assert is_comodule(s, e)
    assert socle(e).dims == sa.dims
    assert not is_coboundary(s, sb, sa, res.cocycles[0])


def _random_setup(seed, side=RIGHT):
    rng = random.Random(seed)
    q = random_quiver(rng, max_vertices=3, max_bundles=4, max_mult=2)
    shape = random_shape(rng, q, rng.choice(["full", "forbid"]))
    return rng, shape, random_comodule(rng, shape, side, 4), random_comodule(rng, shape, side, 4)


@pytest.mark.parametrize("seed", range(25))
def test_duality_swaps_arguments(seed):
    _, shape, m, n = _random_setup(seed)
    assert hom(m, n).dim == hom(side_flip(n), side_flip(m)).dim
    assert ext1(shape, m, n).dim == ext1(shape, side_flip(n), side_flip(m)).dim


@pytest.mark.parametrize("seed", range(25))
def test_socle_quotient_and_loewy_bounds(seed):
    _, shape, m, _ = _random_setup(seed)
    soc = socle(m)
    assert 0 < soc.total_dim <= m.total_dim
    quo = quotient_by_socle(m)
    assert is_comodule(shape, quo)
    assert quo.total_dim == m.total_dim - soc.total_dim
    f = loewy(m)
    assert f.layers[0] == dict(sorted(soc.dims.items()))
    assert f.loewy_length <= m.total_dim
    if quo.total_dim:
        assert loewy(quo).loewy_length == f.loewy_length - 1
    for lo, hi in zip(f.layers, f.layers[1:]):
        assert all(lo[v] < hi[v] for v in lo) or sum(lo.values()) < sum(hi.values())


@pytest.mark.parametrize("seed", range(15))
def test_socle_of_injective_is_simple(seed):
    rng = random.Random(seed)
    q = random_quiver(rng, max_vertices=4, max_bundles=5)
    shape = random_shape(rng, q, rng.choice(["full", "forbid"]))
    v = rng.choice(q.sorted_vertices)
    for side in (RIGHT, LEFT):
        e = injective_trunc(shape, v, side, 2)
        assert socle(e).dims == simple(shape, v).dims


@pytest.mark.parametrize("seed", range(15))
def test_hom_additive(seed):
    rng, shape, m, n = _random_setup(seed)
    k = random_comodule(rng, shape, RIGHT, 3)
    assert hom(direct_sum(m, k), n).dim == hom(m, n).dim + hom(k, n).dim
    assert ext1(shape, n, direct_sum(m, k)).dim == ext1(shape, n, m).dim + ext1(shape, n, k).dim


def test_prime_field_ext():
    F = Field(2)
    s = MonomialShape.full(thick(2))
    assert ext1(s, simple(s, "b", RIGHT, F), simple(s, "a", RIGHT, F)).dim == 2


def test_non_nilpotent_witness_acts_nonzero():
    q = Quiver.build(["u", "v"], [("x", "u", "v"), ("y", "v", "u")])
    s = MonomialShape.full(q)
    rep = Representation(s, RIGHT, {"u": 1, "v": 1}, {"x": mat([[1]]), "y": mat([[2]])})
    chk = is_comodule(s, rep)
    assert not chk and chk.reason == "not nilpotent"
    assert len(chk.witness) == rep.total_dim + 1
    assert not linalg.is_zero(rep.composite(chk.witness))


@pytest.mark.parametrize("seed", range(15))
def test_loewy_length_of_truncated_injective(seed):
    from pathcoalg.paths import enumerate_paths

    rng = random.Random(500 + seed)
    q = random_quiver(rng, max_vertices=3, max_bundles=4)
    shape = random_shape(rng, q, rng.choice(["full", "forbid"]))
    v = rng.choice(q.sorted_vertices)
    d = rng.randint(0, 3)
    e = injective_trunc(shape, v, RIGHT, d)
    longest = max(len(p) for p in enumerate_paths(shape, v, None, d)[0])
    assert loewy(e).loewy_length == longest + 1 <= d + 1



@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10**6))
def test_euler_matches_hom_minus_ext_on_acyclic_full(seed):
    rng = random.Random(seed)
    q = random_quiver(rng, max_vertices=4, max_bundles=5, max_mult=2, acyclic=True)
    s = MonomialShape.full(q)
    m, n = random_comodule(rng, s, RIGHT, 4), random_comodule(rng, s, RIGHT, 4)
    assert euler_pairing(s, m, n) == hom(m, n).dim - ext1(s, m, n).dim


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10**6))
def test_cocycles_assemble_to_comodules(seed):
    _, shape, m, n = _random_setup(seed)
    for z in ext1(shape, m, n).cocycles:
        e = assemble_extension(m, n, z)
        assert is_comodule(shape, e)
        assert not is_coboundary(shape, m, n, z)
