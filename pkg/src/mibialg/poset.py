"""Bounded subposets of a finite ambient poset and the interval coproduct.

Basis elements are the subsets of one declared ambient poset whose induced
order has a minimum and a maximum.  The product glues ``P`` and ``Q`` along
``1_P = 0_Q``; the coproduct of ``P`` is

    Delta(P) = sum over x in P_0 of (-inf, x]_P (x) [x, +inf)_P

with ``P_0 = P - {1_P}``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .algebra import ZERO, Algebra, CoproductCarrier, Vec, linear_sum, memoized


class ParseError(ValueError):
    pass


class AmbientPoset:
    """A finite poset given by generating relations; the closure is computed once."""

    def __init__(self, elements, relations=()):
        self.elements: tuple[str, ...] = tuple(elements)
        if len(set(self.elements)) != len(self.elements):
            raise ValueError("duplicate element")
        self.rank = {x: i for i, x in enumerate(self.elements)}
        for x, y in relations:
            for z in (x, y):
                if z not in self.rank:
                    raise ValueError(f"unknown element {z!r}")
        self.leq_pairs = _closure(self.elements, relations)
        cycle = _find_cycle(self.leq_pairs)
        if cycle:
            raise ValueError(f"cycle detected: {' <= '.join(cycle)}")

    def leq(self, x: str, y: str) -> bool:
        return (x, y) in self.leq_pairs

    def bounds(self, carrier) -> tuple[str, str] | None:
        """``(0_P, 1_P)`` of the induced order, or ``None`` if unbounded."""
        lo = [x for x in carrier if all(self.leq(x, y) for y in carrier)]
        hi = [x for x in carrier if all(self.leq(y, x) for y in carrier)]
        if len(lo) == 1 and len(hi) == 1:
            return lo[0], hi[0]
        return None

    def subposet(self, carrier) -> "Subposet":
        carrier = frozenset(carrier)
        if not carrier:
            raise ValueError("empty subposet")
        for x in carrier:
            if x not in self.rank:
                raise ValueError(f"unknown element {x!r}")
        b = self.bounds(carrier)
        if b is None:
            raise ValueError(f"{sorted(carrier)} has no minimum or no maximum")
        return Subposet(carrier, b[0], b[1])


def _closure(elements, relations) -> frozenset:
    leq = {(x, x) for x in elements} | set(relations)
    changed = True
    while changed:
        changed = False
        for (a, b), (c, d) in itertools.product(list(leq), repeat=2):
            if b == c and (a, d) not in leq:
                leq.add((a, d))
                changed = True
    return frozenset(leq)


def _find_cycle(leq) -> list[str] | None:
    for x, y in sorted(leq):
        if x != y and (y, x) in leq:
            return [x, y, x]
    return None


@dataclass(frozen=True)
class Subposet:
    elements: frozenset
    bottom: str
    top: str

    @property
    def lower(self) -> frozenset:
        """``P_0 = P - {1_P}``."""
        return self.elements - {self.top}


class PosetAlgebra(Algebra, CoproductCarrier):
    """The algebra spanned by bounded subposets of ``ambient``."""

    name = "poset"

    def __init__(self, ambient: AmbientPoset, max_size: int | None = None):
        super().__init__()
        self.ambient = ambient
        self.max_size = len(ambient.elements) if max_size is None else max_size
        self._window = enumerate_bounded_subposets(ambient, self.max_size)
        self.guard_hits: list[tuple[Subposet, Subposet]] = []

    def product(self, p: Subposet, q: Subposet) -> Vec:
        return star_product(self.ambient, p, q, self.guard_hits)

    def basis_window(self) -> list[Subposet]:
        return list(self._window)

    def sort_key(self, p: Subposet):
        return (len(p.elements), tuple(sorted(self.ambient.rank[x] for x in p.elements)))

    def render_basis(self, p: Subposet) -> str:
        return "{" + ",".join(sorted(p.elements, key=self.ambient.rank.__getitem__)) + "}"

    def sub(self, *elements: str) -> Subposet:
        return self.ambient.subposet(elements)

    def delta(self, p: Subposet) -> Vec:
        terms = []
        for x in p.lower:
            terms.append(((interval_down(self.ambient, p, x), interval_up(self.ambient, p, x)), 1))
        return Vec(terms)

    @memoized
    def t3(self, s: Subposet, p: Subposet) -> Vec:
        return poset_t3(self.ambient, s, p)

    @memoized
    def t4(self, p: Subposet, s: Subposet) -> Vec:
        return poset_t4(self.ambient, p, s)

    def nondegeneracy_witnesses(self, p: Subposet):
        units = local_units_for(self.ambient, [Vec.basis(p)])
        return units[1], units[0]


def star_product(ambient: AmbientPoset, p: Subposet, q: Subposet, guard_log=None) -> Vec:
    """``P*Q = P u Q`` when ``1_P = 0_Q`` and the union is bounded by ``0_P, 1_Q``."""
    if p.top != q.bottom:
        return ZERO
    union = p.elements | q.elements
    if ambient.bounds(union) != (p.bottom, q.top):
        # cannot happen for subposets of a single ambient; kept visible anyway
        if guard_log is not None:
            guard_log.append((p, q))
        return ZERO
    return Vec.basis(Subposet(union, p.bottom, q.top))


def interval_down(ambient: AmbientPoset, p: Subposet, x: str) -> Subposet | None:
    """``(-inf, x]_P``, or ``None`` (the zero element) when ``x`` is not in ``P_0``."""
    if x not in p.lower:
        return None
    return Subposet(frozenset(y for y in p.elements if ambient.leq(y, x)), p.bottom, x)


def interval_up(ambient: AmbientPoset, p: Subposet, x: str) -> Subposet | None:
    if x not in p.lower:
        return None
    return Subposet(frozenset(y for y in p.elements if ambient.leq(x, y)), x, p.top)


def poset_t3(ambient: AmbientPoset, s: Subposet, p: Subposet) -> Vec:
    """``Delta(P)(S (x) 1) = ((-inf, 0_S]_P * S) (x) [0_S, +inf)_P`` if ``0_S in P_0``."""
    x = s.bottom
    down = interval_down(ambient, p, x)
    if down is None:
        return ZERO
    left = star_product(ambient, down, s)
    up = interval_up(ambient, p, x)
    return Vec._raw({(k, up): c for k, c in left.items()})


def poset_t4(ambient: AmbientPoset, p: Subposet, s: Subposet) -> Vec:
    """``(1 (x) S) Delta(P) = (-inf, 1_S]_P (x) (S * [1_S, +inf)_P)`` if ``1_S in P_0``."""
    x = s.top
    up = interval_up(ambient, p, x)
    if up is None:
        return ZERO
    right = star_product(ambient, s, up)
    down = interval_down(ambient, p, x)
    return Vec._raw({(down, k): c for k, c in right.items()})


def poset_t3_sum(ambient: AmbientPoset, s: Subposet, p: Subposet) -> Vec:
    """``sum_{x in P_0} (-inf, x]_P * S (x) [x, +inf)_P`` without the collapse to ``x = 0_S``."""
    parts = []
    for x in sorted(p.lower, key=ambient.rank.__getitem__):
        down, up = interval_down(ambient, p, x), interval_up(ambient, p, x)
        parts.append(Vec._raw({(k, up): c for k, c in star_product(ambient, down, s).items()}))
    return linear_sum(parts)


def poset_t4_sum(ambient: AmbientPoset, p: Subposet, s: Subposet) -> Vec:
    parts = []
    for x in sorted(p.lower, key=ambient.rank.__getitem__):
        down, up = interval_down(ambient, p, x), interval_up(ambient, p, x)
        parts.append(Vec._raw({(down, k): c for k, c in star_product(ambient, s, up).items()}))
    return linear_sum(parts)


def enumerate_bounded_subposets(ambient: AmbientPoset, max_size: int) -> list[Subposet]:
    """All bounded carriers of size ``<= max_size``, by size then ambient order."""
    if max_size < 1:
        raise ValueError("max_size must be at least 1")
    out = []
    for size in range(1, min(max_size, len(ambient.elements)) + 1):
        for combo in itertools.combinations(ambient.elements, size):
            b = ambient.bounds(combo)
            if b is not None:
                out.append(Subposet(frozenset(combo), b[0], b[1]))
    return out


def local_units_for(ambient: AmbientPoset, elems) -> tuple[Vec, Vec]:
    """Left and right local units ``sum {0_P}`` and ``sum {1_P}`` over the supports."""
    bottoms, tops = set(), set()
    for e in elems:
        for p in e:
            bottoms.add(p.bottom)
            tops.add(p.top)

    def singletons(points):
        return Vec([(Subposet(frozenset([x]), x, x), 1) for x in points])

    return singletons(bottoms), singletons(tops)


def parse_poset(text: str) -> AmbientPoset:
    """Parse ``e <name>`` / ``le <x> <y>`` lines; ``#`` starts a comment.

    A cyclic relation is reported before undeclared names so that the
    error points at the antisymmetry violation.
    """
    elements: list[str] = []
    rels: list[tuple[int, str, str]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tok = line.split()
        if tok[0] == "e" and len(tok) == 2:
            if tok[1] in elements:
                raise ParseError(f"line {lineno}: duplicate element {tok[1]!r}")
            elements.append(tok[1])
        elif tok[0] == "le" and len(tok) == 3:
            rels.append((lineno, tok[1], tok[2]))
        else:
            raise ParseError(f"line {lineno}: malformed line {raw.strip()!r}")
    names = list(dict.fromkeys(elements + [z for _, x, y in rels for z in (x, y)]))
    cycle = _find_cycle(_closure(names, [(x, y) for _, x, y in rels]))
    if cycle:
        raise ParseError(f"cycle detected: {' <= '.join(cycle)}")
    for lineno, x, y in rels:
        for z in (x, y):
            if z not in elements:
                raise ParseError(f"line {lineno}: unknown element {z!r}")
    return AmbientPoset(elements, [(x, y) for _, x, y in rels])


def chain(n: int) -> AmbientPoset:
    names = [str(i) for i in range(n)]
    return AmbientPoset(names, list(zip(names, names[1:])))


def diamond() -> AmbientPoset:
    return AmbientPoset(["0", "a", "b", "1"], [("0", "a"), ("0", "b"), ("a", "1"), ("b", "1")])
