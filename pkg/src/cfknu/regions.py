"""Finite lattice windows of CFK^infty and the maps between them.

For depth ``n >= 1`` and Alexander parameter ``s``:

* ``MAX``:    0 <= max(i, j - s) <= n - 1   (large positive surgery)
* ``MIN``:    0 <= min(i, j - s) <= n - 1   (large negative surgery)
* ``COLUMN``: 0 <= i <= n - 1               (truncated complex of S^3)

Each window holds exactly ``n`` consecutive translates of every generator.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .complex import CfkComplex, require_valid
from .f2 import F2Matrix


class WindowKind(str, Enum):
    MAX = "MaxWindow"
    MIN = "MinWindow"
    COLUMN = "ColumnWindow"


@dataclass(frozen=True)
class Window:
    kind: WindowKind
    s: int
    n: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"window depth must be >= 1, got {self.n}")

    def level(self, alexander: int, t: int) -> int:
        """The quantity constrained to lie in [0, n-1] for translate t."""
        if self.kind is WindowKind.COLUMN:
            return t
        if self.kind is WindowKind.MAX:
            return max(t, t + alexander - self.s)
        return min(t, t + alexander - self.s)

    def contains(self, alexander: int, t: int) -> bool:
        return 0 <= self.level(alexander, t) <= self.n - 1

    def first_translate(self, alexander: int) -> int:
        """Smallest qualifying t; the qualifying set is [first, first + n - 1]."""
        if self.kind is WindowKind.COLUMN:
            return 0
        if self.kind is WindowKind.MAX:
            return -max(0, alexander - self.s)
        return -min(0, alexander - self.s)


def MaxWindow(s: int, n: int) -> Window:
    return Window(WindowKind.MAX, s, n)


def MinWindow(s: int, n: int) -> Window:
    return Window(WindowKind.MIN, s, n)


def ColumnWindow(n: int) -> Window:
    return Window(WindowKind.COLUMN, 0, n)


@dataclass(frozen=True)
class LatticeElement:
    generator: str
    t: int
    alexander: int

    @property
    def i(self) -> int:
        return self.t

    @property
    def j(self) -> int:
        return self.t + self.alexander


@dataclass(frozen=True)
class RegionComplex:
    basis: tuple[LatticeElement, ...]
    boundary: F2Matrix
    maslov: tuple[int, ...]
    window: Window
    source: str
    offsets: tuple[int, ...]  # first qualifying translate, per generator

    def __len__(self) -> int:
        return len(self.basis)

    def position(self, gen_index: int, t: int) -> int | None:
        """Basis index of translate t of the gen_index-th generator, if present."""
        o = self.offsets[gen_index]
        if o <= t < o + self.window.n:
            return gen_index * self.window.n + (t - o)
        return None


def extract(c: CfkComplex, w: Window, check: bool = True) -> RegionComplex:
    """Subquotient complex on the lattice elements inside ``w``.

    Basis order: generator declaration order, then t ascending. Arrows
    leaving the window are dropped.
    """
    if check:
        require_valid(c)
    n = w.n
    offsets = tuple(w.first_translate(g.alexander) for g in c.generators)
    basis: list[LatticeElement] = []
    maslov: list[int] = []
    for g, o in zip(c.generators, offsets):
        for t in range(o, o + n):
            basis.append(LatticeElement(g.id, t, g.alexander))
            maslov.append(g.maslov + 2 * t)
    cols = [0] * len(basis)
    for k, outs in enumerate(c.arrows_from()):
        o = offsets[k]
        for dt in range(n):
            col = 0
            t = o + dt
            for y, a in outs:
                oy = offsets[y]
                ty = t - a
                if oy <= ty < oy + n:
                    col ^= 1 << (y * n + ty - oy)
            cols[k * n + dt] = col
    return RegionComplex(tuple(basis), F2Matrix(len(basis), len(basis), tuple(cols)), tuple(maslov), w, c.name, offsets)


@dataclass(frozen=True)
class ChainMap:
    domain: RegionComplex
    codomain: RegionComplex
    matrix: F2Matrix

    def commutes(self) -> bool:
        return (self.matrix @ self.domain.boundary).columns == (self.codomain.boundary @ self.matrix).columns


def aligned_map(domain: RegionComplex, codomain: RegionComplex) -> F2Matrix:
    """Send each basis element to the identically named element of the codomain, or to 0."""
    n = domain.window.n
    cols = []
    for k in range(len(domain.offsets)):
        o = domain.offsets[k]
        for t in range(o, o + n):
            p = codomain.position(k, t)
            cols.append(0 if p is None else 1 << p)
    return F2Matrix(len(codomain), len(domain), tuple(cols))


def chain_map_pos(c: CfkComplex, s: int, n: int, check: bool = True) -> ChainMap:
    """A^n_s -> B^n: quotient by the i < 0 part, then include."""
    if check:
        require_valid(c)
    dom = extract(c, MaxWindow(s, n), check=False)
    cod = extract(c, ColumnWindow(n), check=False)
    return ChainMap(dom, cod, aligned_map(dom, cod))


def chain_map_neg(c: CfkComplex, s: int, n: int, check: bool = True) -> ChainMap:
    """B^n -> A^{-n}_s: quotient by the j < s part, then include."""
    if check:
        require_valid(c)
    dom = extract(c, ColumnWindow(n), check=False)
    cod = extract(c, MinWindow(s, n), check=False)
    return ChainMap(dom, cod, aligned_map(dom, cod))
