from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from mibialg.algebra import (
    ZERO,
    Vec,
    add,
    cycle,
    flip,
    identity_multiplier,
    mult_compose,
    mult_embed,
    multiplier_defects,
    orbit_sum,
    render_scalar,
    scalar,
    tensor,
    delta_left_act,
    delta_right_act,
)
from mibialg.cyclic import GroupAlgebra

B = Vec.basis

keys = st.sampled_from(["p", "q", "r", "s"])
coeffs = st.fractions(min_value=-5, max_value=5, max_denominator=6)
vecs = st.dictionaries(keys, coeffs, max_size=4).map(Vec)
pairs = st.dictionaries(st.tuples(keys, keys), coeffs, max_size=5).map(Vec)
triples = st.dictionaries(st.tuples(keys, keys, keys), coeffs, max_size=5).map(Vec)


def test_scalar_canonical():
    assert scalar(Fraction(4, 2)) == 2 and type(scalar(Fraction(4, 2))) is int
    assert scalar("3/6") == Fraction(1, 2)
    with pytest.raises(TypeError):
        scalar(0.5)


def test_render_scalar():
    assert render_scalar(Fraction(-1, 3)) == "-1/3"
    assert render_scalar(7) == "7"


def test_add_examples():
    assert add(B("p", 2), B("p", 3)) == B("p", 5)
    assert add(B("e"), B("e", -1)) == ZERO
    assert not dict(add(B("e"), B("e", -1)))
    assert B(1) + B(2) + (B(2) - B(1)) == B(2, 2)


def test_zero_coefficients_dropped():
    v = Vec([("p", 1), ("p", -1), ("q", 0)])
    assert len(v) == 0


def test_tensor_examples():
    assert tensor(B("e"), B("e")) == B(("e", "e"))
    assert tensor(B("a") + B("b"), B("c")) == Vec([(("a", "c"), 1), (("b", "c"), 1)])
    assert tensor(ZERO, B("x")) == ZERO


def test_flip_examples():
    assert flip(B(("e", "a"))) == B(("a", "e"))
    w = Vec([(("u", "v"), 1), (("v", "u"), -1)])
    assert flip(w) == -w


def test_cycle_orientation():
    # (Id (x) flip)(flip (x) Id): u v w -> v u w -> v w u
    assert cycle(B(("u", "v", "w"))) == B(("v", "w", "u"))
    assert cycle(B(("x", "x", "x"))) == B(("x", "x", "x"))
    t = B(("u", "v", "w"))
    assert orbit_sum(t) == Vec([(("u", "v", "w"), 1), (("v", "w", "u"), 1), (("w", "u", "v"), 1)])


@given(pairs)
def test_flip_involution(t):
    assert flip(flip(t)) == t


@given(triples)
def test_cycle_order_three(t):
    assert cycle(cycle(cycle(t))) == t
    assert orbit_sum(cycle(t)) == orbit_sum(t)


@given(vecs, vecs, vecs, coeffs)
def test_tensor_bilinear(u, v, w, c):
    assert tensor(u + v, w) == tensor(u, w) + tensor(v, w)
    assert tensor(u.scale(c), w) == tensor(u, w.scale(c))


@given(vecs, vecs)
def test_addition_commutes_and_cancels(u, v):
    assert u + v == v + u
    assert (u + v) - v == u


@given(st.lists(st.integers(-3, 3), min_size=1, max_size=3), st.integers(-3, 3), st.integers(-3, 3))
def test_mul_bilinear_kf(xs, y, z):
    kf = GroupAlgebra(3)
    x = Vec([(n, 1) for n in xs])
    assert kf.mul(x + B(y), B(z)) == kf.mul(x, B(z)) + kf.mul(B(y), B(z))


def test_mult_embed_examples(qchain, chain3):
    kf = GroupAlgebra(3)
    assert mult_embed(B(1), kf).left(B(2)) == B(3)
    alpha = qchain.path("alpha")
    assert mult_embed(B(qchain.path("u")), qchain).left(B(alpha)) == B(alpha)
    p0, p01 = chain3.sub("0"), chain3.sub("0", "1")
    assert mult_embed(B(p0), chain3).left(B(p01)) == B(p01)


def test_mult_compose_matches_product():
    kf = GroupAlgebra(3)
    probes = [B(n) for n in kf.basis_window()]
    m = mult_compose(mult_embed(B(1), kf), mult_embed(B(-1), kf))
    e = mult_embed(B(0), kf)
    for p in probes:
        assert m.left(p) == e.left(p) and m.right(p) == e.right(p)
    ident = mult_compose(identity_multiplier(), mult_embed(B(2), kf))
    for p in probes:
        assert ident.left(p) == kf.mul(B(2), p)


def test_mult_compose_general(qchain):
    probes = [B(p) for p in qchain.basis_window()]
    for a in qchain.basis_window():
        for b in qchain.basis_window():
            m = mult_compose(mult_embed(B(a), qchain), mult_embed(B(b), qchain))
            ab = mult_embed(qchain.mul(B(a), B(b)), qchain)
            for p in probes:
                assert m.left(p) == ab.left(p)
                assert m.right(p) == ab.right(p)


def test_embedded_multipliers_have_no_defects(qchain):
    probes = qchain.basis_window()
    for a in probes:
        assert multiplier_defects(mult_embed(B(a), qchain), qchain, probes) == []


def test_delta_actions_examples(qchain):
    kf = GroupAlgebra(3)
    assert delta_left_act(kf, B(2), B((0, 0))) == Vec([((0, 1), 1), ((1, 0), 1)])
    assert delta_right_act(B((0, 0)), kf, B(2)) == Vec([((0, 1), 1), ((1, 0), 1)])
    ab = qchain.path("alpha", "beta")
    eu, ew = qchain.path("u"), qchain.path("w")
    assert delta_left_act(qchain, B(ab), B((eu, ew))) == B((eu, qchain.path("beta")))
    assert delta_right_act(B((eu, ew)), qchain, B(ab)) == B((qchain.path("alpha"), ew))
    assert delta_left_act(qchain, B(ab), ZERO) == ZERO
    assert delta_right_act(B((eu, ew)), qchain, B(eu)) == ZERO
