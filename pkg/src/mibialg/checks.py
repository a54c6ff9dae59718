"""Generic axiom checkers for algebras carrying a multiplier coproduct.

Every checker walks a finite window of basis elements and yields one
:class:`CheckReport` per witness.  Failures are reports, never exceptions.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .algebra import Algebra, Vec, render_scalar, act, delta_left_act, delta_right_act, tensor_mul


@dataclass
class CheckReport:
    suite: str
    family: str
    witness: tuple
    passed: bool
    lhs: Vec | None = None
    rhs: Vec | None = None
    renderer: Algebra | None = field(default=None, repr=False, compare=False)
    # report-only suites describe a property without asserting it
    report_only: bool = False

    @property
    def status(self) -> str:
        if self.report_only:
            return "holds" if self.passed else "violated"
        return "pass" if self.passed else "fail"

    def render_item(self, item) -> str:
        if isinstance(item, str):
            return item
        if self.renderer is not None:
            return self.renderer.render_basis(item)
        return str(item)

    def rendered_witness(self) -> list[str]:
        return [self.render_item(w) for w in self.witness]

    def sort_key(self) -> tuple:
        def one(item):
            if isinstance(item, str):
                return (1, item)
            if self.renderer is not None:
                return (0, self.renderer.sort_key(item))
            return (0, item)

        return (self.suite, self.family, tuple(one(w) for w in self.witness))

    def rendered_side(self, v) -> str | None:
        if v is None:
            return None
        if isinstance(v, Vec):
            if self.renderer is not None:
                return self.renderer.render(v)
            return repr(dict(v))
        if hasattr(v, "render"):
            return v.render()
        return render_scalar(v) if isinstance(v, (int, Fraction)) else str(v)

Sampler = Callable[[list], list]


def sampler(k: int | None, seed: int = 0) -> Sampler | None:
    """Deterministic down-sampling of witness lists: same seed, same subset."""
    if k is None:
        return None

    def pick(witnesses: list) -> list:
        if len(witnesses) <= k:
            return witnesses
        rng = random.Random(seed)
        idx = sorted(rng.sample(range(len(witnesses)), k))
        return [witnesses[i] for i in idx]

    return pick


def witnesses(window: Sequence, arity: int, sample: Sampler | None = None) -> list[tuple]:
    ws = list(itertools.product(window, repeat=arity))
    return sample(ws) if sample is not None else ws


def report(suite, fam: Algebra, witness, lhs, rhs, **kw) -> CheckReport:
    ok = lhs == rhs
    return CheckReport(
        suite, fam.name, tuple(witness), ok, None if ok else lhs, None if ok else rhs, renderer=fam, **kw
    )


def _pair(x, y) -> Vec:
    return Vec._raw({(x, y): 1})


# ---------------------------------------------------------------------------


def check_associativity(fam: Algebra, window: Sequence, sample: Sampler | None = None):
    for a, b, c in witnesses(window, 3, sample):
        va, vb, vc = Vec.basis(a), Vec.basis(b), Vec.basis(c)
        lhs = fam.mul(fam.mul(va, vb), vc)
        rhs = fam.mul(va, fam.mul(vb, vc))
        yield report("assoc", fam, (a, b, c), lhs, rhs)


def check_coassociativity(c, window: Sequence, sample: Sampler | None = None):
    """``(iota (x) T4)(T3 (x) iota) = (T3 (x) iota)(iota (x) T4)`` on basis triples."""
    for a, b, z in witnesses(window, 3, sample):
        lhs: dict = {}
        for (p, q), k in c.t3(a, b).items():
            for (r, s), kk in c.t4(q, z).items():
                _add(lhs, (p, r, s), k * kk)
        rhs: dict = {}
        for (r, s), k in c.t4(b, z).items():
            for (p, q), kk in c.t3(a, r).items():
                _add(rhs, (p, q, s), k * kk)
        yield report("coassoc", c, (a, b, z), Vec(lhs), Vec(rhs))


def _add(acc: dict, key, value) -> None:
    acc[key] = acc.get(key, 0) + value


def check_derivation(c, window: Sequence, sample: Sampler | None = None):
    """``Delta(ab) = Delta(a)(1 (x) b) + (a (x) 1)Delta(b)`` probed on both sides.

    Left probe:  ``Delta(ab)(x(x)y) = Delta(a)(x (x) by) + (a(x)1)Delta(b)(x(x)y)``.
    Right probe: ``(x(x)y)Delta(ab) = (x(x)y)Delta(a)(1(x)b) + (xa (x) y)Delta(b)``.
    """
    for a, b, x, y in witnesses(window, 4, sample):
        va, vb = Vec.basis(a), Vec.basis(b)
        ab = c.mul(va, vb)
        probe = _pair(x, y)
        lhs = delta_left_act(c, ab, probe)
        rhs = delta_left_act(c, va, act(c, probe, pre=(None, vb))) + act(
            c, delta_left_act(c, vb, probe), pre=(va, None)
        )
        yield report("deriv", c, (a, b, x, y, "left"), lhs, rhs)
        lhs = delta_right_act(probe, c, ab)
        rhs = act(c, delta_right_act(probe, c, va), post=(None, vb)) + delta_right_act(
            act(c, probe, post=(va, None)), c, vb
        )
        yield report("deriv", c, (a, b, x, y, "right"), lhs, rhs)


def check_multiplier_compat(c, window: Sequence, sample: Sampler | None = None):
    """``(x(x)y) [Delta(b)(u(x)v)] = [(x(x)y) Delta(b)] (u(x)v)`` on window tuples."""
    left_cache: dict = {}
    right_cache: dict = {}
    for b, x, y, u, v in witnesses(window, 5, sample):
        inner = left_cache.get((b, u, v))
        if inner is None:
            inner = left_cache[(b, u, v)] = delta_left_act(c, Vec.basis(b), _pair(u, v))
        outer = right_cache.get((b, x, y))
        if outer is None:
            outer = right_cache[(b, x, y)] = delta_right_act(_pair(x, y), c, Vec.basis(b))
        lhs = tensor_mul(c, _pair(x, y), inner)
        rhs = tensor_mul(c, outer, _pair(u, v))
        yield report("compat", c, (b, x, y, u, v), lhs, rhs)


def check_nondegeneracy(fam: Algebra, window: Sequence, sample: Sampler | None = None):
    """Witness-based nondegeneracy: each ``b`` has ``c, c'`` with ``bc != 0 != c'b``.

    A family may supply ``nondegeneracy_witnesses(b)`` (for instance local
    units); otherwise the window is searched.  The witness field lists the
    element and the two witnesses found (``-`` when none exists).
    """
    items = [(b,) for b in window]
    if sample is not None:
        items = sample(items)
    hook = getattr(fam, "nondegeneracy_witnesses", None)
    for (b,) in items:
        vb = Vec.basis(b)
        right = left = None
        if hook is not None:
            right, left = hook(b)
        if right is None:
            right = next((Vec.basis(w) for w in window if fam.mul(vb, Vec.basis(w))), None)
        if left is None:
            left = next((Vec.basis(w) for w in window if fam.mul(Vec.basis(w), vb)), None)
        ok = (
            right is not None
            and left is not None
            and bool(fam.mul(vb, right))
            and bool(fam.mul(left, vb))
        )
        shown = (
            b,
            "-" if right is None else fam.render(right),
            "-" if left is None else fam.render(left),
        )
        yield CheckReport("nondegen", fam.name, shown, ok, renderer=fam)


def all_passed(reports: Iterable[CheckReport]) -> bool:
    return all(r.passed for r in reports if not r.report_only)
