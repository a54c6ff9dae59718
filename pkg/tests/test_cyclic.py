import itertools

from hypothesis import given, settings, strategies as st

from mibialg.algebra import ZERO, Vec
from mibialg.checks import all_passed, check_coassociativity, check_derivation, check_multiplier_compat
from mibialg.cyclic import (
    GE,
    LE,
    NONE,
    GroupAlgebra,
    Kernel,
    KernelTerm,
    act_left,
    act_right,
    check_closed_vs_recursive,
    check_duality_pairing,
    check_generalized_derivation,
    check_star_associativity,
    check_star_rule,
    evaluate,
    k_dot,
    k_star,
    kernel_apply,
    kernel_delta,
    kernel_eq,
    kf_delta,
    kf_delta_recursive,
    kf_mul,
    pairing,
)

B = Vec.basis


def T(*terms):
    return Vec([((m, n), c) for m, n, c in terms])


def test_group_law():
    assert kf_mul(2, 3) == 5 and kf_mul(1, -1) == 0 and kf_mul(0, 7) == 7


def test_delta_values():
    assert kf_delta(1) == T((0, 0, 1))
    assert kf_delta(-1) == T((-1, -1, -1))
    assert kf_delta(-2) == T((-2, -1, -1), (-1, -2, -1))
    assert kf_delta(0) == ZERO
    assert kf_delta_recursive(2) == T((0, 1, 1), (1, 0, 1))
    assert kf_delta_recursive(-2) == kf_delta(-2)
    assert kf_delta_recursive(1) == T((0, 0, 1))


def test_closed_form_equals_recursion():
    assert all_passed(check_closed_vs_recursive(20))


def test_render():
    kf = GroupAlgebra(3)
    assert kf.render(kf_delta(-1)) == "-1*(a^-1 ⊗ a^-1)"
    assert kf.render(kf_delta(2)) == "1*(e ⊗ a^1) + 1*(a^1 ⊗ e)"


def test_slices():
    kf = GroupAlgebra(3)
    assert kf.t3(0, 2) == kf_delta(2)
    assert kf.t3(1, 1) == T((1, 0, 1))
    assert kf.t4(1, 1) == T((0, 1, 1))


def test_kf_axioms():
    kf = GroupAlgebra(3)
    w = kf.basis_window()
    assert all_passed(check_coassociativity(kf, w))
    assert all_passed(check_derivation(kf, w))
    assert all_passed(check_multiplier_compat(GroupAlgebra(2), GroupAlgebra(2).basis_window()))


def test_star_examples():
    assert k_star(B(2), B(3)) == B(6)
    assert k_star(B(-2), B(-3)) == B(-4, -1)
    assert k_star(B(1), B(-1)) == ZERO
    assert all_passed(check_star_rule(6))
    assert all_passed(check_star_associativity(4))


def test_dot_examples():
    assert k_dot(B(2), B(2)) == B(2)
    assert k_dot(B(1), B(2)) == ZERO
    assert k_dot(B(1) + B(2), B(2)) == B(2)


@given(st.integers(-4, 4), st.integers(-4, 4), st.integers(-4, 4))
def test_dot_associative_commutative(l, m, n):
    x, y, z = B(l), B(m), B(n)
    assert k_dot(k_dot(x, y), z) == k_dot(x, k_dot(y, z))
    assert k_dot(x, y) == k_dot(y, x)
    assert k_star(x + y, z) == k_star(x, z) + k_star(y, z)


def test_kernel_delta():
    F = kernel_delta(B(1))
    assert F.normal_form() == ((1, 1, ()),)
    assert kernel_delta(ZERO) == Kernel()
    assert kernel_delta(B(0) + B(3, 2)).normal_form() == ((0, 1, ()), (3, 2, ()))


def test_actions_on_generators():
    assert act_left(B(0), kernel_delta(B(0))) == Kernel([KernelTerm(1, GE, 1, 1)])
    assert act_left(B(-1), kernel_delta(B(-1))) == Kernel([KernelTerm(-1, LE, -1, -1)])
    assert act_left(ZERO, kernel_delta(B(3))) == Kernel()
    assert act_right(kernel_delta(B(2)), ZERO) == Kernel()


def test_kernel_apply():
    F = kernel_delta(B(2))
    assert kernel_apply(F, B((0, 2))) == B((0, 2))
    assert kernel_apply(F, B((0, 1))) == ZERO
    assert kernel_apply(Kernel(), B((0, 2))) == ZERO


def test_kernel_eq_examples():
    split = Kernel([KernelTerm(1, GE, 1, 1), KernelTerm(1, LE, 0, 1)])
    assert kernel_eq(split, kernel_delta(B(1)))
    assert not kernel_eq(Kernel([KernelTerm(1, GE, 1, 1)]), Kernel([KernelTerm(1, GE, 2, 1)]))
    assert kernel_eq(Kernel(), Kernel())


terms = st.builds(
    KernelTerm,
    st.integers(-3, 3),
    st.sampled_from([NONE, GE, LE]),
    st.integers(-3, 3),
    st.integers(-2, 2),
)
kernels = st.lists(terms, max_size=5).map(Kernel)


@given(kernels)
def test_normalization_idempotent_and_pointwise(F):
    N = F.normalized()
    assert N.normal_form() == N.normalized().normal_form()
    for m, n in itertools.product(range(-6, 7), repeat=2):
        assert F(m, n) == N(m, n)


@given(kernels, kernels)
def test_kernel_eq_matches_pointwise(F, G):
    # terms live in |bound| <= 3, so disagreement shows up on this box
    same = all(F(m, n) == G(m, n) for m, n in itertools.product(range(-8, 9), repeat=2))
    assert kernel_eq(F, G) == same


# pointwise definitions of the two actions, written independently of the kernel code


def left_point(p, F, m, n):
    s = m - p - 1
    if p >= 0:
        return F(s, n) if s >= 0 else 0
    return -F(s, n) if s <= -1 else 0


def right_point(F, q, m, n):
    s = n - q - 1
    if q >= 0:
        return F(m, s) if s >= 0 else 0
    return -F(m, s) if s <= -1 else 0


def test_actions_brute_force():
    box = range(-10, 11)
    for p, q in itertools.product(range(-4, 5), repeat=2):
        F = kernel_delta(B(q))
        L = act_left(B(p), F)
        R = act_right(F, B(p))
        for m, n in itertools.product(box, repeat=2):
            assert L(m, n) == left_point(p, F, m, n)
            assert R(m, n) == right_point(F, p, m, n)


def test_generalized_derivation_pointwise():
    box = range(-10, 11)
    for p, q in itertools.product(box, repeat=2):
        lhs = kernel_delta(k_star(B(p), B(q)))
        Fp, Fq = kernel_delta(B(p)), kernel_delta(B(q))
        for m, n in itertools.product(range(-6, 7), repeat=2):
            assert lhs(m, n) == left_point(p, Fq, m, n) + right_point(Fp, q, m, n)


def test_generalized_derivation_symbolic():
    assert all_passed(check_generalized_derivation(6))


def test_duality():
    assert evaluate(k_star(B(0), B(0)), 1) == 1
    assert pairing(B((0, 0)), kf_delta(1)) == 1
    assert evaluate(k_star(B(0), B(0)), 2) == 0 == pairing(B((0, 0)), kf_delta(2))
    assert all_passed(check_duality_pairing(4))
