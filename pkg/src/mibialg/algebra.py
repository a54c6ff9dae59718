"""Exact free-module arithmetic over the rationals.

A :class:`Vec` is a finite formal linear combination of hashable basis
keys.  Elements of ``A`` use the basis elements of a family directly;
elements of ``A (x) A`` and ``A (x) A (x) A`` use 2- and 3-tuples of basis
elements as keys.  Coefficients are ``int`` or :class:`fractions.Fraction`
and are never rounded; a ``Fraction`` with unit denominator is stored as an
``int`` so that the common integer case stays fast.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Callable, Hashable, Iterable, Iterator, Mapping, Union

Scalar = Union[int, Fraction]


def scalar(value) -> Scalar:
    """Coerce *value* to a canonical exact scalar.  Floats are rejected."""
    if isinstance(value, bool):
        return int(value)
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        return value.numerator if value.denominator == 1 else value
    if isinstance(value, Rational):
        return scalar(Fraction(value.numerator, value.denominator))
    if isinstance(value, str):
        return scalar(Fraction(value))
    raise TypeError(f"inexact or unsupported scalar {value!r}")


def render_scalar(c: Scalar) -> str:
    if isinstance(c, Fraction):
        return f"{c.numerator}/{c.denominator}"
    return str(c)


class Vec(Mapping):
    """Immutable sparse vector; zero coefficients are never stored."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping | Iterable | None = None):
        acc: dict = {}
        if terms is not None:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for key, c in items:
                c = scalar(c)
                if c:
                    total = acc.get(key, 0) + c
                    if total:
                        acc[key] = total
                    else:
                        del acc[key]
        self._terms = {k: scalar(v) for k, v in acc.items()}
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict) -> "Vec":
        # terms must already be canonical (no zeros, exact scalars)
        v = cls.__new__(cls)
        v._terms = terms
        v._hash = None
        return v

    @classmethod
    def basis(cls, key: Hashable, coeff: Scalar = 1) -> "Vec":
        coeff = scalar(coeff)
        return cls._raw({key: coeff} if coeff else {})

    # Mapping protocol
    def __getitem__(self, key):
        return self._terms.get(key, 0)

    def __iter__(self) -> Iterator:
        return iter(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __contains__(self, key) -> bool:
        return key in self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, Vec):
            return self._terms == other._terms
        if other == 0:
            return not self._terms
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __repr__(self) -> str:
        return f"Vec({self._terms!r})"

    # linear structure
    def __add__(self, other: "Vec") -> "Vec":
        if not isinstance(other, Vec):
            return NotImplemented
        if not other._terms:
            return self
        acc = dict(self._terms)
        _accumulate(acc, other._terms.items())
        return Vec._raw(acc)

    def __neg__(self) -> "Vec":
        return Vec._raw({k: -c for k, c in self._terms.items()})

    def __sub__(self, other: "Vec") -> "Vec":
        if not isinstance(other, Vec):
            return NotImplemented
        return self + (-other)

    def scale(self, c) -> "Vec":
        c = scalar(c)
        if not c:
            return ZERO
        return Vec._raw({k: scalar(c * v) for k, v in self._terms.items()})

    def __rmul__(self, c) -> "Vec":
        return self.scale(c)

    def __mul__(self, c) -> "Vec":
        if isinstance(c, Vec):
            return NotImplemented
        return self.scale(c)

    def map_keys(self, f: Callable) -> "Vec":
        """Linear map induced by a basis-to-basis function."""
        acc: dict = {}
        _accumulate(acc, ((f(k), c) for k, c in self._terms.items()))
        return Vec._raw(acc)

    def render(self, key_sort: Callable, key_render: Callable) -> str:
        if not self._terms:
            return "0"
        parts = []
        for k in sorted(self._terms, key=key_sort):
            c = self._terms[k]
            parts.append(f"{render_scalar(c)}*{key_render(k)}")
        return " + ".join(parts)


ZERO = Vec._raw({})


def _accumulate(acc: dict, items: Iterable) -> None:
    for k, c in items:
        total = acc.get(k, 0) + c
        if total:
            acc[k] = scalar(total) if isinstance(total, Fraction) else total
        else:
            acc.pop(k, None)


def linear_sum(vecs: Iterable[Vec]) -> Vec:
    acc: dict = {}
    for v in vecs:
        _accumulate(acc, v.items())
    return Vec._raw(acc)


def add(e1: Vec, e2: Vec) -> Vec:
    return e1 + e2


def extend_linear(f: Callable[..., Vec], *args: Vec) -> Vec:
    """Multilinear extension of a basis-level map ``f`` to vectors."""
    if len(args) == 1:
        acc: dict = {}
        for k, c in args[0].items():
            _accumulate(acc, ((kk, c * cc) for kk, cc in f(k).items()))
        return Vec._raw(acc)
    acc = {}
    first, rest = args[0], args[1:]
    for k, c in first.items():
        part = extend_linear(lambda *ks: f(k, *ks), *rest)
        _accumulate(acc, ((kk, c * cc) for kk, cc in part.items()))
    return Vec._raw(acc)


# ---------------------------------------------------------------------------
# tensors


def tensor(*vecs: Vec) -> Vec:
    """Outer product; keys of the result are tuples."""
    acc: dict = {(): 1}
    for v in vecs:
        nxt: dict = {}
        for k, c in acc.items():
            for k2, c2 in v.items():
                nxt[k + (k2,)] = c * c2
        acc = nxt
    return Vec._raw({k: c for k, c in acc.items() if c})


def flip(t: Vec) -> Vec:
    """The flip ``u (x) v -> v (x) u``."""
    return Vec._raw({(v, u): c for (u, v), c in t.items()})


def cycle(t: Vec) -> Vec:
    """``sigma = (Id (x) flip) o (flip (x) Id)``, i.e. ``u v w -> v w u``."""
    return Vec._raw({(v, w, u): c for (u, v, w), c in t.items()})


def orbit_sum(t: Vec) -> Vec:
    """``(Id + sigma + sigma^2) t``."""
    s = cycle(t)
    return t + s + cycle(s)


def memoized(method):
    """Cache a method of hashable positional arguments on its instance."""
    slot = "_memo_" + method.__name__

    @functools.wraps(method)
    def wrapper(self, *args):
        cache = self.__dict__.get(slot)
        if cache is None:
            cache = self.__dict__[slot] = {}
        try:
            return cache[args]
        except KeyError:
            r = cache[args] = method(self, *args)
            return r

    return wrapper


# ---------------------------------------------------------------------------
# algebra families


class Algebra:
    """An associative algebra presented by a basis and a basis product.

    Subclasses provide :meth:`product`, :meth:`basis_window`,
    :meth:`sort_key` and :meth:`render_basis`.  Basis products are cached.
    """

    name = "algebra"

    def __init__(self):
        self._prod_cache: dict = {}

    def product(self, x, y) -> Vec:
        raise NotImplementedError

    def basis_window(self) -> list:
        raise NotImplementedError

    def sort_key(self, b):
        return b

    def render_basis(self, b) -> str:
        return str(b)

    def prod(self, x, y) -> Vec:
        key = (x, y)
        try:
            return self._prod_cache[key]
        except KeyError:
            r = self._prod_cache[key] = self.product(x, y)
            return r

    def mul(self, u: Vec, v: Vec) -> Vec:
        acc: dict = {}
        prod = self.prod
        for x, c in u.items():
            for y, d in v.items():
                p = prod(x, y)
                if p:
                    cd = c * d
                    _accumulate(acc, ((k, cd * e) for k, e in p.items()))
        return Vec._raw(acc)

    def el(self, b, coeff: Scalar = 1) -> Vec:
        return Vec.basis(b, coeff)

    def tensor_key(self, k: tuple):
        return tuple(self.sort_key(b) for b in k)

    def render(self, v: Vec) -> str:
        """Render an element of ``A``, ``A(x)A`` or ``A(x)A(x)A``."""

        def key(k):
            return self.tensor_key(k) if isinstance(k, tuple) else self.sort_key(k)

        def show(k):
            if isinstance(k, tuple):
                return "(" + " ⊗ ".join(self.render_basis(b) for b in k) + ")"
            return self.render_basis(k)

        return v.render(key, show)


def mul(e1: Vec, e2: Vec, fam: Algebra) -> Vec:
    return fam.mul(e1, e2)


def commutator(x: Vec, y: Vec, fam: Algebra) -> Vec:
    return fam.mul(x, y) - fam.mul(y, x)


def act(fam: Algebra, t: Vec, pre=(None, None), post=(None, None)) -> Vec:
    """``(pre0 (x) pre1) . t . (post0 (x) post1)`` on ``A (x) A``.

    Each factor is a :class:`Vec` in ``A`` or ``None`` for the unit of
    ``M(A)``; the result only involves honest products inside ``A``.
    """
    legs = []
    for i in range(2):
        legs.append((pre[i], post[i]))
    acc: dict = {}
    cache: list[dict] = [{}, {}]
    for (u, v), c in t.items():
        parts = []
        for i, b in ((0, u), (1, v)):
            got = cache[i].get(b)
            if got is None:
                p, q = legs[i]
                got = Vec.basis(b)
                if p is not None:
                    got = fam.mul(p, got)
                if q is not None and got:
                    got = fam.mul(got, q)
                cache[i][b] = got
            if not got:
                break
            parts.append(got)
        else:
            for k0, c0 in parts[0].items():
                cc = c * c0
                _accumulate(acc, (((k0, k1), cc * c1) for k1, c1 in parts[1].items()))
    return Vec._raw(acc)


def tensor_mul(fam: Algebra, s: Vec, t: Vec) -> Vec:
    """Product in ``A (x) A`` with the componentwise multiplication."""
    acc: dict = {}
    prod = fam.prod
    for (a0, a1), c in s.items():
        for (b0, b1), d in t.items():
            p0 = prod(a0, b0)
            if not p0:
                continue
            p1 = prod(a1, b1)
            if not p1:
                continue
            cd = c * d
            for k0, c0 in p0.items():
                x = cd * c0
                _accumulate(acc, (((k0, k1), x * c1) for k1, c1 in p1.items()))
    return Vec._raw(acc)


# ---------------------------------------------------------------------------
# multipliers


@dataclass(frozen=True)
class MultiplierPair:
    """A pair of linear maps ``(left, right)`` standing for a multiplier.

    ``left`` is the left multiplier ``lambda`` and ``right`` the right
    multiplier ``rho``; a compatible pair satisfies ``b lambda(c) = rho(b) c``.
    """

    left: Callable[[Vec], Vec]
    right: Callable[[Vec], Vec]


def identity_multiplier() -> MultiplierPair:
    return MultiplierPair(lambda v: v, lambda v: v)


def mult_embed(a: Vec, fam: Algebra) -> MultiplierPair:
    """``a -> (lambda_a, rho_a)`` with ``lambda_a(b) = ab`` and ``rho_a(b) = ba``."""
    return MultiplierPair(lambda b: fam.mul(a, b), lambda b: fam.mul(b, a))


def mult_compose(m1: MultiplierPair, m2: MultiplierPair) -> MultiplierPair:
    """``(l, r)(l', r') = (l o l', r' o r)``."""
    return MultiplierPair(lambda v: m1.left(m2.left(v)), lambda v: m2.right(m1.right(v)))


def multiplier_defects(m: MultiplierPair, fam: Algebra, probes: Iterable) -> list[tuple]:
    """Probe pairs on which ``m`` fails to be a multiplier of ``A``."""
    probes = list(probes)
    bad = []
    for s in probes:
        for t in probes:
            vs, vt = Vec.basis(s), Vec.basis(t)
            st = fam.mul(vs, vt)
            if m.left(st) != fam.mul(m.left(vs), vt):
                bad.append(("left", s, t))
            if m.right(st) != fam.mul(vs, m.right(vt)):
                bad.append(("right", s, t))
            if fam.mul(vs, m.left(vt)) != fam.mul(m.right(vs), vt):
                bad.append(("compat", s, t))
    return bad


# ---------------------------------------------------------------------------
# coproducts given through T3 / T4


class CoproductCarrier:
    """Mixin exposing a multiplier coproduct through its two slices.

    ``t3(a, b) = Delta(b)(a (x) 1)`` and ``t4(a, b) = (1 (x) b) Delta(a)``,
    both defined on basis elements and valued in ``A (x) A``.
    """

    def t3(self, a, b) -> Vec:
        raise NotImplementedError

    def t4(self, a, b) -> Vec:
        raise NotImplementedError

    def t3_vec(self, a: Vec, b: Vec) -> Vec:
        return extend_linear(self.t3, a, b)

    def t4_vec(self, a: Vec, b: Vec) -> Vec:
        return extend_linear(self.t4, a, b)


def delta_left_act(c, b: Vec, t: Vec) -> Vec:
    """``Delta(b)(x (x) y) = [Delta(b)(x (x) 1)] (1 (x) y)``, linear in ``b`` and ``t``."""
    acc: dict = {}
    prod = c.prod
    for (x, y), ct in t.items():
        for bb, cb in b.items():
            k = ct * cb
            for (p, q), cq in c.t3(x, bb).items():
                kk = k * cq
                _accumulate(acc, (((p, r), kk * cr) for r, cr in prod(q, y).items()))
    return Vec._raw(acc)


def delta_right_act(t: Vec, c, b: Vec) -> Vec:
    """``(x (x) y) Delta(b) = (x (x) 1) [(1 (x) y) Delta(b)]``."""
    acc: dict = {}
    prod = c.prod
    for (x, y), ct in t.items():
        for bb, cb in b.items():
            k = ct * cb
            for (p, q), cp in c.t4(bb, y).items():
                kk = k * cp
                _accumulate(acc, (((r, q), kk * cr) for r, cr in prod(x, p).items()))
    return Vec._raw(acc)


def coproduct_multiplier(c, b: Vec) -> MultiplierPair:
    """``Delta(b)`` as a multiplier pair acting on ``A (x) A``."""
    return MultiplierPair(lambda t: delta_left_act(c, b, t), lambda t: delta_right_act(t, c, b))
