"""Lie-ization of multiplier epsilon-bialgebras and derivator Lie bialgebras.

Naming: ``delta_a(x) = (1(x)a)Delta(x) - flip`` is the t4-form cobracket and
``zeta^a(x) = Delta(x)(a(x)1) - flip`` the t3-form one.  The identities
relating the cobrackets to the bibalanceator were settled by the oracle in
:func:`prop_identity_oracle`; the validated combination is hard-coded in
:func:`check_prop_identity`.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Sequence

from .algebra import (
    ZERO,
    Algebra,
    Vec,
    act,
    commutator,
    extend_linear,
    flip,
    orbit_sum,
    scalar,
)
from .checks import CheckReport, Sampler, report, witnesses

B = Vec.basis


# ---------------------------------------------------------------------------
# brackets and the adjoint action on tensors


def ad_tensor(bracket: Callable[[Vec, Vec], Vec], x: Vec, t: Vec) -> Vec:
    """``(ad_x (x) 1 + 1 (x) ad_x) t`` for any bracket on vectors."""
    parts = []
    for (u, v), c in t.items():
        bu = bracket(x, B(u))
        bv = bracket(x, B(v))
        parts.append(Vec._raw({(k, v): c * cc for k, cc in bu.items()}))
        parts.append(Vec._raw({(u, k): c * cc for k, cc in bv.items()}))
    acc = ZERO
    for p in parts:
        acc = acc + p
    return acc


def adjoint_act(x: Vec, t: Vec, fam: Algebra) -> Vec:
    """``x . t`` for the commutator bracket of an associative family."""
    return act(fam, t, pre=(x, None)) - act(fam, t, post=(x, None)) + act(
        fam, t, pre=(None, x)
    ) - act(fam, t, post=(None, x))


def wedge(u, v) -> Vec:
    """``u ^ v = u(x)v - v(x)u`` on basis keys."""
    return Vec([((u, v), 1), ((v, u), -1)])


# ---------------------------------------------------------------------------
# cobrackets, intertwiners and the bibalanceator of a carrier


def cobracket_delta(c, a, x) -> Vec:
    """``(1(x)a)Delta(x) - flip``."""
    u = c.t4(x, a)
    return u - flip(u)


def cobracket_zeta(c, a, x) -> Vec:
    """``Delta(x)(a(x)1) - flip``."""
    u = c.t3(a, x)
    return u - flip(u)


def t1_op(c, u, v) -> Vec:
    """``T1(u(x)v) = (1(x)u)Delta(v)``."""
    return c.t4(v, u)


def t2_op(c, u, v) -> Vec:
    """``T2(u(x)v) = Delta(u)(v(x)1)``."""
    return c.t3(v, u)


def bibalanceator_under(c, a, x, y) -> Vec:
    ax = c.mul(B(a), B(x))
    ay = c.mul(B(a), B(y))
    return (
        act(c, flip(c.t3(a, y)), pre=(B(x), None))
        - flip(c.t3_vec(ax, B(y)))
        + act(c, c.t3(a, x), pre=(None, B(y)))
        - c.t3_vec(ay, B(x))
    )


def bibalanceator_over(c, a, x, y, reading: str = "x") -> Vec:
    """Second component; ``reading`` picks the coproduct argument of the third term.

    ``"x"`` is the validated reading ``(1(x)ya)Delta(x)``; ``"y"`` keeps
    ``Delta(y)`` and only exists for the oracle.
    """
    xa = c.mul(B(x), B(a))
    ya = c.mul(B(y), B(a))
    third = B(x) if reading == "x" else B(y)
    return (
        flip(c.t4_vec(B(y), xa))
        - act(c, flip(c.t3(x, y)), pre=(B(a), None))
        + c.t4_vec(third, ya)
        - act(c, c.t3(y, x), pre=(None, B(a)))
    )


def _extend_cobracket(cob, c, a, v: Vec) -> Vec:
    return extend_linear(lambda z: cob(c, a, z), v)


def _identity_sides(c, a, x, y, cob, bal, sign: int) -> tuple[Vec, Vec]:
    bracket = commutator(B(x), B(y), c)
    lhs = _extend_cobracket(cob, c, a, bracket)
    anti = bal(x, y) - bal(y, x)
    rhs = (
        adjoint_act(B(x), cob(c, a, y), c)
        - adjoint_act(B(y), cob(c, a, x), c)
        + anti.scale(sign)
    )
    return lhs, rhs


# sign +1: B(x(x)y) - B(y(x)x); sign -1: the opposite orientation
PROP_COMBINATION = {"pairing": "t3-under", "reading": "x", "sign": 1}


def _prop_sides(c, a, x, y, which: str, pairing: str, reading: str, sign: int):
    if pairing == "t3-under":
        cob = cobracket_zeta if which == "zeta" else cobracket_delta
    else:
        cob = cobracket_delta if which == "zeta" else cobracket_zeta
    if which == "zeta":
        bal = lambda u, v: bibalanceator_under(c, a, u, v)  # noqa: E731
    else:
        bal = lambda u, v: bibalanceator_over(c, a, u, v, reading)  # noqa: E731
    return _identity_sides(c, a, x, y, cob, bal, sign)


def check_prop_identity(c, window: Sequence, sample: Sampler | None = None):
    """``cob_a[x,y] = x.cob_a(y) - y.cob_a(x) + B(a)(x(x)y) - B(a)(y(x)x)``.

    ``zeta`` (t3-form) pairs with the under component, ``delta`` (t4-form)
    with the over component read as ``(1(x)ya)Delta(x)``.
    """
    combo = PROP_COMBINATION
    for a, x, y in witnesses(window, 3, sample):
        for which in ("zeta", "delta"):
            lhs, rhs = _prop_sides(c, a, x, y, which, combo["pairing"], combo["reading"], combo["sign"])
            yield report("prop-identity", c, (a, x, y, which), lhs, rhs)


def prop_identity_oracle(carriers: Sequence, signs=(1, -1)) -> dict:
    """Try every pairing, third-term reading and sign on every carrier window.

    Returns ``{(pairing, reading, sign): [bool per carrier]}``.  ``sign = -1``
    is the orientation ``B(a)(y(x)x) - B(a)(x(x)y)``.
    """
    out = {}
    for pairing, reading, sign in itertools.product(("t3-under", "t4-under"), ("x", "y"), signs):
        verdicts = []
        for c in carriers:
            ok = True
            for a, x, y in itertools.product(c.basis_window(), repeat=3):
                for which in ("zeta", "delta"):
                    lhs, rhs = _prop_sides(c, a, x, y, which, pairing, reading, sign)
                    if lhs != rhs:
                        ok = False
                        break
                if not ok:
                    break
            verdicts.append(ok)
        out[(pairing, reading, sign)] = verdicts
    return out


def check_bibalanceator_symmetric(c, window: Sequence, sample: Sampler | None = None):
    """Report-only: ``B(a)(x(x)y) = B(a)(y(x)x)`` for both components."""
    for a, x, y in witnesses(window, 3, sample):
        yield report(
            "bibal-sym", c, (a, x, y, "under"),
            bibalanceator_under(c, a, x, y), bibalanceator_under(c, a, y, x), report_only=True,
        )
        yield report(
            "bibal-sym", c, (a, x, y, "over"),
            bibalanceator_over(c, a, x, y), bibalanceator_over(c, a, y, x), report_only=True,
        )


def check_bibalanced(c, window: Sequence, sample: Sampler | None = None):
    """Report-only: both components vanish."""
    for a, x, y in witnesses(window, 3, sample):
        yield report("bibalanced", c, (a, x, y, "under"), bibalanceator_under(c, a, x, y), ZERO, report_only=True)
        yield report("bibalanced", c, (a, x, y, "over"), bibalanceator_over(c, a, x, y), ZERO, report_only=True)


def check_commutator_jacobi(c, window: Sequence, sample: Sampler | None = None):
    for x, y, z in witnesses(window, 3, sample):
        vx, vy, vz = B(x), B(y), B(z)
        lhs = (
            commutator(commutator(vx, vy, c), vz, c)
            + commutator(commutator(vy, vz, c), vx, c)
            + commutator(commutator(vz, vx, c), vy, c)
        )
        yield report("lie-jacobi", c, (x, y, z), lhs, ZERO)


# ---------------------------------------------------------------------------
# derivator data


@dataclass
class DerivatorData:
    """``(g, [,], delta, zeta, T1, T2)`` with every map given on basis elements.

    ``delta(a, x)`` is ``delta_a(x)``, ``zeta(b, x)`` is ``zeta^b(x)`` and
    ``t1(u, v)``, ``t2(u, v)`` are the intertwiners on ``u (x) v``.
    """

    name: str
    basis: list
    bracket: Callable[[Vec, Vec], Vec]
    delta: Callable
    zeta: Callable
    t1: Callable
    t2: Callable
    renderer: object

    def delta_vec(self, a, t: Vec) -> Vec:
        return extend_linear(lambda z: self.delta(a, z), t)

    def zeta_vec(self, b, t: Vec) -> Vec:
        return extend_linear(lambda z: self.zeta(b, z), t)


def first_leg(f: Callable, t: Vec) -> Vec:
    """``(f (x) Id) t`` for a basis-level ``f`` valued in ``A (x) A``."""
    acc: dict = {}
    for (u, v), c in t.items():
        for (p, q), cc in f(u).items():
            k = (p, q, v)
            total = acc.get(k, 0) + c * cc
            if total:
                acc[k] = total
            else:
                acc.pop(k, None)
    return Vec(acc)


def cojacobi_sides(data: DerivatorData, a, b, x) -> tuple[Vec, Vec]:
    lhs = orbit_sum(first_leg(lambda u: data.zeta(b, u), data.t1(a, x)))
    rhs = orbit_sum(first_leg(lambda u: data.delta(a, u), flip(data.t2(x, b))))
    return lhs, rhs


def check_generalized_cojacobi(data: DerivatorData, window: Sequence | None = None, sample: Sampler | None = None):
    window = data.basis if window is None else window
    for a, b, x in witnesses(window, 3, sample):
        lhs, rhs = cojacobi_sides(data, a, b, x)
        yield _report(data, "cojacobi", (a, b, x), lhs, rhs)


def check_cojacobi_vanishing(data: DerivatorData, window: Sequence | None = None, sample: Sampler | None = None):
    """Both sides of the generalized CoJacobi identity are zero."""
    window = data.basis if window is None else window
    for a, b, x in witnesses(window, 3, sample):
        lhs, rhs = cojacobi_sides(data, a, b, x)
        yield _report(data, "cojacobi-zero", (a, b, x, "lhs"), lhs, ZERO)
        yield _report(data, "cojacobi-zero", (a, b, x, "rhs"), rhs, ZERO)


def check_antisymmetry(data: DerivatorData, window: Sequence | None = None, sample: Sampler | None = None):
    window = data.basis if window is None else window
    for a, x in witnesses(window, 2, sample):
        d = data.delta(a, x)
        yield _report(data, "antisym", (a, x, "delta"), flip(d), -d)
        z = data.zeta(a, x)
        yield _report(data, "antisym", (a, x, "zeta"), flip(z), -z)


def check_derivation_values(data: DerivatorData, window: Sequence | None = None, sample: Sampler | None = None):
    """Each ``delta_a`` and ``zeta^a`` is a derivation ``g -> g (x) g``."""
    window = data.basis if window is None else window
    for a, x, y in witnesses(window, 3, sample):
        br = data.bracket(B(x), B(y))
        for which, f in (("delta", data.delta), ("zeta", data.zeta)):
            lhs = extend_linear(lambda z: f(a, z), br)
            rhs = ad_tensor(data.bracket, B(x), f(a, y)) - ad_tensor(data.bracket, B(y), f(a, x))
            yield _report(data, "der-values", (a, x, y, which), lhs, rhs)


def check_derivator(data: DerivatorData, window: Sequence | None = None, sample: Sampler | None = None):
    """All axioms of a derivator Lie bialgebra on the window."""
    yield from check_antisymmetry(data, window, sample)
    yield from check_derivation_values(data, window, sample)
    yield from check_generalized_cojacobi(data, window, sample)


def _report(data: DerivatorData, suite, witness, lhs, rhs, **kw) -> CheckReport:
    ok = lhs == rhs
    return CheckReport(
        suite, data.name, tuple(witness), ok, None if ok else lhs, None if ok else rhs,
        renderer=data.renderer, **kw,
    )


def derivator_from_carrier(c) -> DerivatorData:
    """The data built from a carrier: commutator bracket, both cobrackets, ``T1``, ``T2``."""
    return DerivatorData(
        name=c.name,
        basis=c.basis_window(),
        bracket=lambda u, v: commutator(u, v, c),
        delta=lambda a, x: cobracket_delta(c, a, x),
        zeta=lambda b, x: cobracket_zeta(c, b, x),
        t1=lambda u, v: t1_op(c, u, v),
        t2=lambda u, v: t2_op(c, u, v),
        renderer=c,
    )


def symmetry_and_cojacobi(c, window: Sequence | None = None) -> tuple[bool, bool]:
    """``(bibalanceator symmetric on window, generalized CoJacobi on window)``."""
    window = c.basis_window() if window is None else window
    sym = all(r.passed for r in check_bibalanceator_symmetric(c, window))
    coj = all(r.passed for r in check_generalized_cojacobi(derivator_from_carrier(c), window))
    return sym, coj


# ---------------------------------------------------------------------------
# finite-dimensional Lie algebras


class FinLieAlgebra:
    """A Lie algebra over the rationals given by structure constants.

    ``brackets`` maps a pair of basis names ``(x, y)`` to ``{z: c}``; pairs not
    listed bracket to zero unless their reverse is listed.  Construction
    fails with :class:`ValueError` if antisymmetry or Jacobi is violated.
    """

    name = "lie"

    def __init__(self, names: Sequence[str], brackets: dict, name: str | None = None):
        self.names = tuple(names)
        if name is not None:
            self.name = name
        self._rank = {n: i for i, n in enumerate(self.names)}
        table: dict = {}
        for (x, y), val in brackets.items():
            for k in (x, y, *val):
                if k not in self._rank:
                    raise ValueError(f"unknown basis element {k!r}")
            v = Vec(val)
            rev = brackets.get((y, x))
            if rev is not None and Vec(rev) != -v:
                raise ValueError(f"bracket not antisymmetric on ({x}, {y})")
            if x == y and v:
                raise ValueError(f"[{x}, {x}] must vanish")
            table[(x, y)] = v
            table[(y, x)] = -v
        self._table = table
        bad = self.jacobi_defect()
        if bad is not None:
            raise ValueError(f"Jacobi identity fails on {bad}")

    def basis_window(self) -> list[str]:
        return list(self.names)

    def sort_key(self, b):
        return self._rank[b]

    def render_basis(self, b) -> str:
        return b

    def render(self, v: Vec) -> str:
        return Algebra.render(self, v)

    tensor_key = Algebra.tensor_key

    def br(self, x, y) -> Vec:
        return self._table.get((x, y), ZERO)

    def bracket(self, u: Vec, v: Vec) -> Vec:
        return extend_linear(self.br, u, v)

    def jacobi_defect(self):
        for x, y, z in itertools.product(self.names, repeat=3):
            bx, by, bz = B(x), B(y), B(z)
            s = (
                self.bracket(self.bracket(bx, by), bz)
                + self.bracket(self.bracket(by, bz), bx)
                + self.bracket(self.bracket(bz, bx), by)
            )
            if s:
                return (x, y, z)
        return None

    def ad_tensor(self, x: Vec, t: Vec) -> Vec:
        return ad_tensor(self.bracket, x, t)


def sl2() -> FinLieAlgebra:
    return FinLieAlgebra(
        ["h", "e", "f"],
        {("h", "e"): {"e": 2}, ("h", "f"): {"f": -2}, ("e", "f"): {"h": 1}},
        name="sl2",
    )


def dim1() -> FinLieAlgebra:
    return FinLieAlgebra(["x"], {}, name="dim1")


def dim2() -> FinLieAlgebra:
    """Basis ``X, Y`` with ``[X, Y] = X``."""
    return FinLieAlgebra(["X", "Y"], {("X", "Y"): {"X": 1}}, name="dim2")


def coboundary_delta(g: FinLieAlgebra, r: Vec, x) -> Vec:
    """``(ad_x (x) 1 + 1 (x) ad_x) r``."""
    return g.ad_tensor(B(x), r)


def sl2_r() -> Vec:
    return wedge("e", "f")


def _lb_report(g, suite, witness, lhs, rhs) -> CheckReport:
    ok = lhs == rhs
    return CheckReport(suite, g.name, tuple(witness), ok, None if ok else lhs, None if ok else rhs, renderer=g)


def check_lie_bialgebra(g: FinLieAlgebra, beta: Callable):
    """Antisymmetry, the cocycle condition and CoJacobi for ``beta`` on basis elements."""
    for x in g.names:
        d = beta(x)
        yield _lb_report(g, "lb-antisym", (x,), flip(d), -d)
    for x, y in itertools.product(g.names, repeat=2):
        lhs = extend_linear(beta, g.br(x, y))
        rhs = g.ad_tensor(B(x), beta(y)) - g.ad_tensor(B(y), beta(x))
        yield _lb_report(g, "lb-cocycle", (x, y), lhs, rhs)
    for x in g.names:
        yield _lb_report(g, "lb-cojacobi", (x,), orbit_sum(first_leg(beta, beta(x))), ZERO)


def is_lie_bialgebra(g: FinLieAlgebra, beta: Callable) -> bool:
    return all(r.passed for r in check_lie_bialgebra(g, beta))


def sl2_coboundary() -> tuple[FinLieAlgebra, Callable]:
    g = sl2()
    r = sl2_r()
    return g, lambda x: coboundary_delta(g, r, x)


def build_functional_example(g: FinLieAlgebra, beta: Callable, alpha: dict) -> DerivatorData:
    """``delta(x) = zeta(x) = alpha(x) beta``, ``T1(a(x)x) = alpha(a)beta(x)``, ``T2(x(x)b) = alpha(b)beta(x)``.

    ``alpha`` maps basis names to scalars (missing names are zero).
    """
    if not is_lie_bialgebra(g, beta):
        raise ValueError("beta is not a Lie bialgebra structure")
    al = {k: scalar(v) for k, v in alpha.items()}
    return DerivatorData(
        name=f"{g.name}:functional",
        basis=list(g.names),
        bracket=g.bracket,
        delta=lambda a, x: beta(x).scale(al.get(a, 0)),
        zeta=lambda b, x: beta(x).scale(al.get(b, 0)),
        t1=lambda a, x: beta(x).scale(al.get(a, 0)),
        t2=lambda x, b: beta(x).scale(al.get(b, 0)),
        renderer=g,
    )


DIM2_VARIANTS = ("iotaX", "zero")


def build_dim2_example(variant: str) -> DerivatorData:
    """``delta = zeta`` with ``delta_X = iota_Y`` and ``delta_Y`` chosen by ``variant``.

    ``iota_W(Z) = Z ^ W``; ``variant`` is ``"iotaX"`` (``delta_Y = iota_X``)
    or ``"zero"``.  Both intertwiners are the identity.
    """
    if variant not in DIM2_VARIANTS:
        raise ValueError(f"unknown variant {variant!r}")
    g = dim2()

    def delta(a, z):
        if a == "X":
            return wedge(z, "Y")
        return wedge(z, "X") if variant == "iotaX" else ZERO

    ident = lambda u, v: Vec._raw({(u, v): 1})  # noqa: E731
    return DerivatorData(
        name=f"dim2:{variant}",
        basis=list(g.names),
        bracket=g.bracket,
        delta=delta,
        zeta=delta,
        t1=ident,
        t2=ident,
        renderer=g,
    )


def dim2_beta(x) -> Vec:
    """``beta(X) = X ^ Y``, ``beta(Y) = 0``."""
    return wedge("X", "Y") if x == "X" else ZERO


def dim2_vanishing_variants() -> list[str]:
    """Variants for which both sides of generalized CoJacobi vanish on the whole basis."""
    return [
        v for v in DIM2_VARIANTS
        if all(r.passed for r in check_cojacobi_vanishing(build_dim2_example(v)))
    ]
