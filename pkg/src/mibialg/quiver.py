"""Finite quivers, their path algebras and the path coproduct.

Paths are composed left to right: ``pq`` is ``p`` followed by ``q`` and is
nonzero only when ``t(p) = s(q)``.  Trivial paths ``e_v`` are basis
idempotents with zero coproduct.  The two symbols ``+inf`` and ``-inf`` are
carried as inert idempotents that only multiply with themselves.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .algebra import ZERO, Algebra, CoproductCarrier, Vec, linear_sum, memoized


class ParseError(ValueError):
    pass


@dataclass(frozen=True)
class Arrow:
    name: str
    source: str
    target: str


@dataclass(frozen=True)
class Quiver:
    vertices: tuple[str, ...]
    arrows: tuple[Arrow, ...]
    _by_name: dict = field(default_factory=dict, compare=False, repr=False, hash=False)

    def __post_init__(self):
        seen = set()
        for name in self.vertices:
            if name in seen:
                raise ValueError(f"duplicate name {name!r}")
            seen.add(name)
        for a in self.arrows:
            if a.name in seen:
                raise ValueError(f"duplicate name {a.name!r}")
            seen.add(a.name)
            for end in (a.source, a.target):
                if end not in self.vertices:
                    raise ValueError(f"unknown vertex {end!r} in arrow {a.name!r}")
            self._by_name[a.name] = a

    @classmethod
    def build(cls, vertices, arrows) -> "Quiver":
        """``Quiver.build(["u", "v"], [("alpha", "u", "v")])``."""
        return cls(tuple(vertices), tuple(Arrow(*a) for a in arrows))

    def arrow(self, name: str) -> Arrow:
        return self._by_name[name]

    def out_arrows(self, v: str) -> list[Arrow]:
        return [a for a in self.arrows if a.source == v]


# kind: 0 finite path, 1 for +inf, 2 for -inf
@dataclass(frozen=True)
class Path:
    source: str
    target: str
    arrows: tuple[str, ...] = ()
    kind: int = 0

    def __len__(self) -> int:
        return len(self.arrows)

    @property
    def is_trivial(self) -> bool:
        return not self.arrows


PLUS_INF = Path("+inf", "+inf", (), 1)
MINUS_INF = Path("-inf", "-inf", (), 2)


def trivial(v: str) -> Path:
    return Path(v, v)


def path_concat(p: Path, q: Path) -> Vec:
    if p.kind or q.kind:
        return Vec.basis(p) if p == q else ZERO
    if p.target != q.source:
        return ZERO
    return Vec.basis(Path(p.source, q.target, p.arrows + q.arrows))


def enumerate_paths(q: Quiver, max_len: int) -> list[Path]:
    """Trivial paths, composable arrow sequences up to ``max_len``, then ``+-inf``."""
    if max_len < 0:
        raise ValueError("max_len must be nonnegative")
    out = [trivial(v) for v in q.vertices]
    layer = out[:]
    for _ in range(max_len):
        nxt = []
        for p in layer:
            for a in q.out_arrows(p.target):
                nxt.append(Path(p.source, a.target, p.arrows + (a.name,)))
        out.extend(nxt)
        layer = nxt
    out.extend([PLUS_INF, MINUS_INF])
    return out


class PathAlgebra(Algebra, CoproductCarrier):
    """Path algebra of a finite quiver truncated to a window of path lengths."""

    name = "quiver"

    def __init__(self, quiver: Quiver, max_len: int = 3):
        super().__init__()
        self.quiver = quiver
        self.max_len = max_len
        self._window = enumerate_paths(quiver, max_len)
        self._vertex_rank = {v: i for i, v in enumerate(quiver.vertices)}
        self._arrow_rank = {a.name: i for i, a in enumerate(quiver.arrows)}
        self._split_cache: dict = {}

    def product(self, x: Path, y: Path) -> Vec:
        return path_concat(x, y)

    def basis_window(self) -> list[Path]:
        return list(self._window)

    def sort_key(self, p: Path):
        if p.kind:
            return (p.kind, 0, (), 0)
        return (0, len(p), tuple(self._arrow_rank[a] for a in p.arrows), self._vertex_rank[p.source])

    def render_basis(self, p: Path) -> str:
        if p.kind:
            return p.source
        if p.is_trivial:
            return f"e_{p.source}"
        return ".".join(p.arrows)

    def sub_path(self, p: Path, lo: int, hi: int) -> Path:
        """Arrows ``lo..hi-1`` of ``p``; the empty range gives a trivial path."""
        if lo >= hi:
            if lo == 0:
                return trivial(p.source)
            return trivial(self.quiver.arrow(p.arrows[lo - 1]).target)
        first = self.quiver.arrow(p.arrows[lo])
        last = self.quiver.arrow(p.arrows[hi - 1])
        return Path(first.source, last.target, p.arrows[lo:hi])

    def splits(self, p: Path) -> list[tuple[Path, Path, int]]:
        """Terms ``(prefix, suffix, coeff)`` of the coproduct: arrow ``i`` is removed."""
        got = self._split_cache.get(p)
        if got is None:
            if p.kind or p.is_trivial:
                got = []
            else:
                n = len(p)
                got = [(self.sub_path(p, 0, i), self.sub_path(p, i + 1, n), 1) for i in range(n)]
            self._split_cache[p] = got
        return got

    def delta(self, p: Path) -> Vec:
        """``Delta(p)`` as an honest element of ``A (x) A`` (finite paths only)."""
        return Vec([((pre, suf), c) for pre, suf, c in self.splits(p)])

    @memoized
    def t3(self, x: Path, p: Path) -> Vec:
        """``Delta(p)(x (x) 1) = sum prefix.x (x) suffix``."""
        return linear_sum(
            Vec._raw({(k, suf): c * cc for k, cc in path_concat(pre, x).items()})
            for pre, suf, c in self.splits(p)
        )

    @memoized
    def t4(self, p: Path, x: Path) -> Vec:
        """``(1 (x) x) Delta(p) = sum prefix (x) x.suffix``."""
        return linear_sum(
            Vec._raw({(pre, k): c * cc for k, cc in path_concat(x, suf).items()})
            for pre, suf, c in self.splits(p)
        )

    def nondegeneracy_witnesses(self, p: Path):
        if p.kind:
            v = Vec.basis(p)
            return v, v
        return Vec.basis(trivial(p.target)), Vec.basis(trivial(p.source))

    def path(self, *names: str) -> Path:
        """Path from arrow names, or the trivial path for a single vertex name."""
        if len(names) == 1 and names[0] in self._vertex_rank:
            return trivial(names[0])
        arrows = [self.quiver.arrow(n) for n in names]
        for a, b in zip(arrows, arrows[1:]):
            if a.target != b.source:
                raise ValueError(f"arrows {a.name} and {b.name} are not composable")
        return Path(arrows[0].source, arrows[-1].target, tuple(names))


def quiver_t3(alg: PathAlgebra, x: Path, p: Path) -> Vec:
    return alg.t3(x, p)


def quiver_t4(alg: PathAlgebra, p: Path, x: Path) -> Vec:
    return alg.t4(p, x)


def parse_quiver(text: str) -> Quiver:
    """Parse the line format ``v <name>`` / ``a <name> <src> <tgt>`` with ``#`` comments."""
    vertices: list[str] = []
    pending: list[tuple[int, Arrow]] = []
    names: set[str] = set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tok = line.split()
        if tok[0] == "v" and len(tok) == 2:
            name = tok[1]
        elif tok[0] == "a" and len(tok) == 4:
            name = tok[1]
        else:
            raise ParseError(f"line {lineno}: malformed line {raw.strip()!r}")
        if name in names:
            raise ParseError(f"line {lineno}: duplicate name {name!r}")
        names.add(name)
        if tok[0] == "v":
            vertices.append(name)
        else:
            pending.append((lineno, Arrow(*tok[1:])))
    declared = set(vertices)
    for lineno, a in pending:
        for end in (a.source, a.target):
            if end not in declared:
                raise ParseError(f"line {lineno}: unknown vertex {end!r}")
    return Quiver(tuple(vertices), tuple(a for _, a in pending))
