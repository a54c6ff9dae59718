"""The infinite cyclic group algebra kF and its restricted dual K(F).

kF has basis ``a^n`` (stored as the integer ``n``) and the divided-difference
coproduct

    Delta(a^n)  =  sum_{i=0}^{n-1} a^i (x) a^{n-1-i}             (n > 0)
    Delta(a^-p) = -sum_{i=1}^{p} a^{-(p+1-i)} (x) a^{-i}         (p > 0)

K(F) has basis ``delta_n`` (also stored as ``n``), the pointwise product
``delta_m . delta_n = [m = n] delta_m`` and the shifted product ``*``.  Its
coproduct lands in functions on ``Z x Z``, represented exactly by
:class:`Kernel`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .algebra import ZERO, Algebra, CoproductCarrier, Scalar, Vec, linear_sum, memoized, render_scalar, scalar
from .checks import Sampler, report, witnesses


def kf_mul(m: int, n: int) -> int:
    return m + n


def kf_delta(n: int) -> Vec:
    """Closed form of ``Delta(a^n)``."""
    if n > 0:
        return Vec._raw({(i, n - 1 - i): 1 for i in range(n)})
    if n < 0:
        p = -n
        return Vec._raw({(-(p + 1 - i), -i): -1 for i in range(1, p + 1)})
    return ZERO


def kf_delta_recursive(n: int) -> Vec:
    """``Delta(a^n)`` from the defining recursions.

    ``Delta(a^n) = (a (x) 1) Delta(a^{n-1}) + e (x) a^{n-1}`` for ``n > 1`` and
    ``Delta(a^{-n}) = -(a^{-n} (x) 1) Delta(a^n) (1 (x) a^{-n})`` for ``n >= 1``.
    """
    if n == 0:
        return ZERO
    if n == 1:
        return Vec.basis((0, 0))
    if n > 1:
        prev = kf_delta_recursive(n - 1)
        shifted = Vec._raw({(u + 1, v): c for (u, v), c in prev.items()})
        return shifted + Vec.basis((0, n - 1))
    p = -n
    pos = kf_delta_recursive(p)
    return Vec._raw({(u - p, v - p): -c for (u, v), c in pos.items()})


class GroupAlgebra(Algebra, CoproductCarrier):
    """kF restricted to the window ``|n| <= bound``."""

    name = "cyclic"

    def __init__(self, bound: int = 3):
        super().__init__()
        self.bound = bound

    def product(self, m: int, n: int) -> Vec:
        return Vec.basis(m + n)

    def basis_window(self) -> list[int]:
        return list(range(-self.bound, self.bound + 1))

    def render_basis(self, n: int) -> str:
        return "e" if n == 0 else f"a^{n}"

    @memoized
    def t3(self, x: int, b: int) -> Vec:
        """``Delta(a^b)(a^x (x) 1)``."""
        return Vec._raw({(u + x, v): c for (u, v), c in kf_delta(b).items()})

    @memoized
    def t4(self, b: int, y: int) -> Vec:
        """``(1 (x) a^y) Delta(a^b)``."""
        return Vec._raw({(u, v + y): c for (u, v), c in kf_delta(b).items()})


# ---------------------------------------------------------------------------
# K(F)


def k_star_basis(m: int, n: int) -> Vec:
    if m >= 0 and n >= 0:
        return Vec.basis(m + n + 1)
    if m < 0 and n < 0:
        return Vec.basis(m + n + 1, -1)
    return ZERO


def k_star(f: Vec, g: Vec) -> Vec:
    acc = []
    for m, c in f.items():
        for n, d in g.items():
            acc.append(k_star_basis(m, n).scale(c * d))
    return linear_sum(acc)


def k_dot(f: Vec, g: Vec) -> Vec:
    return Vec([(m, c * g[m]) for m, c in f.items()])


def evaluate(f: Vec, n: int) -> Scalar:
    """``f(a^n)`` for ``f`` in K(F)."""
    return f[n]


def pairing(ft: Vec, t: Vec) -> Scalar:
    """``<delta_m (x) delta_n, a^i (x) a^j> = [m = i][n = j]``, extended bilinearly."""
    return sum((c * t[k] for k, c in ft.items()), 0)


class DualAlgebra(Algebra, CoproductCarrier):
    """``(K(F), .)`` with ``Delta(f)(a^m, a^n) = f(a^{m+n})`` sliced by T3/T4.

    ``Delta(delta_j)(delta_i (x) 1) = delta_i (x) delta_{j-i}`` and
    ``(1 (x) delta_i) Delta(delta_j) = delta_{j-i} (x) delta_i``.
    """

    name = "cyclic-dual"

    def __init__(self, bound: int = 3):
        super().__init__()
        self.bound = bound

    def product(self, m: int, n: int) -> Vec:
        return Vec.basis(m) if m == n else ZERO

    def basis_window(self) -> list[int]:
        return list(range(-self.bound, self.bound + 1))

    def render_basis(self, n: int) -> str:
        return f"d_{n}"

    def t3(self, i: int, j: int) -> Vec:
        return Vec.basis((i, j - i))

    def t4(self, j: int, i: int) -> Vec:
        return Vec.basis((j - i, i))


# ---------------------------------------------------------------------------
# kernels: exact functions on Z x Z supported on finitely many anti-diagonals


NONE, GE, LE = None, "ge", "le"


@dataclass(frozen=True)
class KernelTerm:
    """``coeff * [m + n = diagonal] * [constraint on m]``."""

    diagonal: int
    constraint: str | None
    bound: int
    coeff: Scalar

    def holds(self, m: int) -> bool:
        if self.constraint is GE:
            return m >= self.bound
        if self.constraint is LE:
            return m <= self.bound
        return True


class Kernel:
    """A finitely described element of ``C(F x F)``.

    Terms are kept as produced; :meth:`normal_form` gives the canonical
    description used for equality: per diagonal, the value at ``m -> -inf``
    followed by the sorted jumps ``(point, step)`` of the step function in
    ``m``.
    """

    __slots__ = ("terms", "_nf")

    def __init__(self, terms: Iterable[KernelTerm] = ()):
        self.terms = tuple(t for t in terms if t.coeff)
        self._nf = None

    def __call__(self, m: int, n: int) -> Scalar:
        k = m + n
        return sum((t.coeff for t in self.terms if t.diagonal == k and t.holds(m)), 0)

    def __add__(self, other: "Kernel") -> "Kernel":
        return Kernel(self.terms + other.terms)

    def scale(self, c) -> "Kernel":
        c = scalar(c)
        return Kernel(KernelTerm(t.diagonal, t.constraint, t.bound, scalar(c * t.coeff)) for t in self.terms)

    def __neg__(self) -> "Kernel":
        return self.scale(-1)

    def normal_form(self) -> tuple:
        if self._nf is None:
            diags: dict[int, list] = {}
            for t in self.terms:
                base, jumps = diags.setdefault(t.diagonal, [0, {}])
                if t.constraint is NONE:
                    diags[t.diagonal][0] = base + t.coeff
                elif t.constraint is GE:
                    jumps[t.bound] = jumps.get(t.bound, 0) + t.coeff
                else:
                    # [m <= b] = 1 - [m >= b + 1]
                    diags[t.diagonal][0] = base + t.coeff
                    jumps[t.bound + 1] = jumps.get(t.bound + 1, 0) - t.coeff
            out = []
            for k in sorted(diags):
                base, jumps = diags[k]
                steps = tuple((p, scalar(s)) for p, s in sorted(jumps.items()) if s)
                if base or steps:
                    out.append((k, scalar(base), steps))
            self._nf = tuple(out)
        return self._nf

    def normalized(self) -> "Kernel":
        terms = []
        for k, base, steps in self.normal_form():
            terms.append(KernelTerm(k, NONE, 0, base))
            terms.extend(KernelTerm(k, GE, p, s) for p, s in steps)
        return Kernel(terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Kernel):
            return NotImplemented
        return self.normal_form() == other.normal_form()

    __hash__ = None

    def __repr__(self) -> str:
        return f"Kernel({self.render()})"

    def render(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for t in self.terms:
            cond = "" if t.constraint is NONE else f", m{'>=' if t.constraint is GE else '<='}{t.bound}"
            parts.append(f"{render_scalar(t.coeff)}*[m+n={t.diagonal}{cond}]")
        return " + ".join(parts)


def kernel_eq(f: Kernel, g: Kernel) -> bool:
    return f == g


def kernel_delta(f: Vec) -> Kernel:
    """``Delta(f)(a^m, a^n) = f(a^{m+n})``: one full diagonal per support point."""
    return Kernel(KernelTerm(k, NONE, 0, c) for k, c in sorted(f.items()))


def _interval(diagonal: int, lo: int | None, hi: int | None, coeff) -> list[KernelTerm]:
    """``coeff * [lo <= m <= hi]`` on one diagonal as half-line terms."""
    if lo is not None and hi is not None:
        if lo > hi:
            return []
        return [KernelTerm(diagonal, GE, lo, coeff), KernelTerm(diagonal, GE, hi + 1, -coeff)]
    if lo is not None:
        return [KernelTerm(diagonal, GE, lo, coeff)]
    if hi is not None:
        return [KernelTerm(diagonal, LE, hi, coeff)]
    return [KernelTerm(diagonal, NONE, 0, coeff)]


def _term_range(t: KernelTerm) -> tuple[int | None, int | None]:
    if t.constraint is GE:
        return t.bound, None
    if t.constraint is LE:
        return None, t.bound
    return None, None


def _meet(a: int | None, b: int | None, pick) -> int | None:
    if a is None:
        return b
    if b is None:
        return a
    return pick(a, b)


def _act_left_basis(p: int, kernel: Kernel) -> list[KernelTerm]:
    # (delta_p |> F)(m, n) =  F(m-p-1, n) [m-p-1 >= 0]   for p >= 0
    #                      = -F(m-p-1, n) [m-p-1 <= -1]  for p <= -1
    shift = p + 1
    out = []
    for t in kernel.terms:
        lo, hi = _term_range(t)
        lo = None if lo is None else lo + shift
        hi = None if hi is None else hi + shift
        if p >= 0:
            lo, sign = _meet(lo, shift, max), 1
        else:
            hi, sign = _meet(hi, p, min), -1
        out.extend(_interval(t.diagonal + shift, lo, hi, sign * t.coeff))
    return out


def _act_right_basis(kernel: Kernel, q: int) -> list[KernelTerm]:
    # (F <| delta_q)(m, n) =  F(m, n-q-1) [n-q-1 >= 0]   for q >= 0
    #                      = -F(m, n-q-1) [n-q-1 <= -1]  for q <= -1
    # on the new diagonal k+q+1 the guard reads m <= k (resp. m >= k+1)
    shift = q + 1
    out = []
    for t in kernel.terms:
        lo, hi = _term_range(t)
        if q >= 0:
            hi, sign = _meet(hi, t.diagonal, min), 1
        else:
            lo, sign = _meet(lo, t.diagonal + 1, max), -1
        out.extend(_interval(t.diagonal + shift, lo, hi, sign * t.coeff))
    return out


def act_left(f: Vec, kernel: Kernel) -> Kernel:
    """``f |> F``, bilinear in ``f``."""
    terms: list[KernelTerm] = []
    for p, c in sorted(f.items()):
        terms.extend(Kernel(_act_left_basis(p, kernel)).scale(c).terms)
    return Kernel(terms)


def act_right(kernel: Kernel, g: Vec) -> Kernel:
    """``F <| g``, bilinear in ``g``."""
    terms: list[KernelTerm] = []
    for q, c in sorted(g.items()):
        terms.extend(Kernel(_act_right_basis(kernel, q)).scale(c).terms)
    return Kernel(terms)


def kernel_apply(kernel: Kernel, t: Vec) -> Vec:
    """Pointwise product of ``F`` with ``t`` in ``K(F) (x) K(F)``."""
    return Vec([((m, n), c * kernel(m, n)) for (m, n), c in t.items()])


# ---------------------------------------------------------------------------
# checkers


def check_closed_vs_recursive(bound: int = 20, sample: Sampler | None = None):
    fam = GroupAlgebra(bound)
    for (n,) in witnesses(range(-bound, bound + 1), 1, sample):
        yield report("closed-form", fam, (n,), kf_delta(n), kf_delta_recursive(n))


def check_star_associativity(bound: int, sample: Sampler | None = None):
    fam = DualAlgebra(bound)
    for l, m, n in witnesses(fam.basis_window(), 3, sample):
        dl, dm, dn = Vec.basis(l), Vec.basis(m), Vec.basis(n)
        yield report("star-assoc", fam, (l, m, n), k_star(k_star(dl, dm), dn), k_star(dl, k_star(dm, dn)))


def check_star_rule(bound: int, sample: Sampler | None = None):
    """``delta_m * delta_n`` against the three-case rule written out by hand."""
    fam = DualAlgebra(bound)
    for m, n in witnesses(fam.basis_window(), 2, sample):
        if m >= 0 and n >= 0:
            expected = Vec.basis(m + n + 1)
        elif m < 0 and n < 0:
            expected = Vec.basis(m + n + 1, -1)
        else:
            expected = ZERO
        yield report("star-rule", fam, (m, n), k_star(Vec.basis(m), Vec.basis(n)), expected)


def check_generalized_derivation(bound: int, sample: Sampler | None = None):
    """``Delta(f * g) = f |> Delta(g) + Delta(f) <| g`` as exact kernel equality."""
    fam = DualAlgebra(bound)
    for m, n in witnesses(fam.basis_window(), 2, sample):
        dm, dn = Vec.basis(m), Vec.basis(n)
        lhs = kernel_delta(k_star(dm, dn))
        rhs = act_left(dm, kernel_delta(dn)) + act_right(kernel_delta(dm), dn)
        yield report("gen-deriv", fam, (m, n), lhs.normalized(), rhs.normalized())


def check_duality_pairing(bound: int, sample: Sampler | None = None):
    """``(delta_m * delta_n)(a^k) = <delta_m (x) delta_n, Delta(a^k)>`` and
    ``Delta(delta_k)(a^m, a^n) = delta_k(a^m a^n)``."""
    fam = DualAlgebra(bound)
    for m, n, k in witnesses(fam.basis_window(), 3, sample):
        dm, dn = Vec.basis(m), Vec.basis(n)
        lhs = evaluate(k_star(dm, dn), k)
        rhs = pairing(Vec.basis((m, n)), kf_delta(k))
        yield report("duality", fam, (m, n, k, "star"), lhs, rhs)
        lhs = kernel_delta(Vec.basis(k))(m, n)
        rhs = evaluate(Vec.basis(k), kf_mul(m, n))
        yield report("duality", fam, (m, n, k, "mult"), lhs, rhs)
