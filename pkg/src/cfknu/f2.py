"""GF(2) linear algebra on int bitsets: ranks, homology and induced maps.

Matrices are stored column-wise. Column ``c`` is a Python int whose bit ``r``
is the entry in row ``r``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Iterable, Sequence

if TYPE_CHECKING:
    from .regions import ChainMap, RegionComplex


class NotAComplex(ValueError):
    pass


class NotChainMap(ValueError):
    pass


@dataclass(frozen=True)
class F2Matrix:
    rows: int
    cols: int
    columns: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.columns) != self.cols:
            raise ValueError(f"expected {self.cols} columns, got {len(self.columns)}")
        limit = 1 << self.rows
        for c in self.columns:
            if c < 0 or c >= limit:
                raise ValueError("column has bits outside the row range")

    @classmethod
    def zeros(cls, rows: int, cols: int) -> F2Matrix:
        return cls(rows, cols, (0,) * cols)

    @classmethod
    def identity(cls, n: int) -> F2Matrix:
        return cls(n, n, tuple(1 << k for k in range(n)))

    @classmethod
    def from_dense(cls, entries: Sequence[Sequence[int]], cols: int | None = None) -> F2Matrix:
        rows = len(entries)
        if cols is None:
            cols = len(entries[0]) if rows else 0
        columns = [0] * cols
        for r, row in enumerate(entries):
            if len(row) != cols:
                raise ValueError("ragged matrix")
            for c, v in enumerate(row):
                if v & 1:
                    columns[c] |= 1 << r
        return cls(rows, cols, tuple(columns))

    def to_dense(self) -> list[list[int]]:
        return [[(self.columns[c] >> r) & 1 for c in range(self.cols)] for r in range(self.rows)]

    def entry(self, r: int, c: int) -> int:
        return (self.columns[c] >> r) & 1

    def transpose(self) -> F2Matrix:
        out = [0] * self.rows
        for c, col in enumerate(self.columns):
            while col:
                low = col & -col
                out[low.bit_length() - 1] |= 1 << c
                col ^= low
        return F2Matrix(self.cols, self.rows, tuple(out))

    def apply(self, vec: int) -> int:
        """Multiply by a column vector given as a bitset."""
        out = 0
        cols = self.columns
        while vec:
            low = vec & -vec
            out ^= cols[low.bit_length() - 1]
            vec ^= low
        return out

    def __matmul__(self, other: F2Matrix) -> F2Matrix:
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        return F2Matrix(self.rows, other.cols, tuple(self.apply(c) for c in other.columns))

    def is_zero(self) -> bool:
        return not any(self.columns)

    def rank(self) -> int:
        return rank(self)


def rank_of_vectors(vectors: Iterable[int]) -> int:
    """Rank of a family of bitset vectors (XOR basis keyed by top bit)."""
    basis: dict[int, int] = {}
    for v in vectors:
        while v:
            top = v.bit_length() - 1
            b = basis.get(top)
            if b is None:
                basis[top] = v
                break
            v ^= b
    return len(basis)


def rank(m: F2Matrix) -> int:
    return rank_of_vectors(m.columns)


@dataclass
class _Reduction:
    """Column reduction R = D V with unique pivots (lowest = highest bit)."""

    pivots: dict[int, int]  # pivot row -> reduced column R_j
    cycles: dict[int, int]  # j with R_j == 0 -> V_j


def _reduce(columns: Sequence[int]) -> _Reduction:
    pivots: dict[int, int] = {}
    cycles: dict[int, int] = {}
    for j, col in enumerate(columns):
        r = col
        v = 1 << j
        while r:
            top = r.bit_length() - 1
            hit = pivots.get(top)
            if hit is None:
                break
            r ^= hit[0]
            v ^= hit[1]
        if r:
            pivots[r.bit_length() - 1] = (r, v)
        else:
            cycles[j] = v
    return _Reduction({k: p[0] for k, p in pivots.items()}, cycles)


@dataclass(frozen=True)
class HomologySummary:
    dim: int
    cycle_reps: tuple[int, ...]
    boundary_rank: int
    cycle_rank: int
    rep_maslov: tuple[int | None, ...] = ()
    # basis index -> vector, over reps (keyed by rep top bit) and boundaries (by pivot)
    _rep_by_top: dict[int, int] = field(default_factory=dict, repr=False, compare=False)
    _rep_slot: dict[int, int] = field(default_factory=dict, repr=False, compare=False)
    _bd_by_top: dict[int, int] = field(default_factory=dict, repr=False, compare=False)

    def coordinates(self, cycle: int) -> int:
        """Express a cycle in the basis of ``cycle_reps``; returns a bitset over reps.

        Raises ``ValueError`` if the vector is not a cycle.
        """
        coords = 0
        z = cycle
        while z:
            top = z.bit_length() - 1
            b = self._bd_by_top.get(top)
            if b is not None:
                z ^= b
                continue
            rep = self._rep_by_top.get(top)
            if rep is None:
                raise ValueError("vector is not a cycle")
            z ^= rep
            coords ^= 1 << self._rep_slot[top]
        return coords


def homology_of_boundary(boundary: F2Matrix, maslov: Sequence[int] | None = None) -> HomologySummary:
    """Homology of a square F2 boundary matrix.

    Representatives are the tracked cycles of a left-to-right column
    reduction whose index is not a pivot of any reduced column; they are
    ordered by basis index.
    """
    if boundary.rows != boundary.cols:
        raise NotAComplex("boundary matrix is not square")
    if not (boundary @ boundary).is_zero():
        raise NotAComplex("boundary squared is nonzero")
    red = _reduce(boundary.columns)
    reps = [(j, v) for j, v in sorted(red.cycles.items()) if j not in red.pivots]
    rep_maslov: list[int | None] = []
    for _, v in reps:
        if maslov is None:
            rep_maslov.append(None)
            continue
        degs = {maslov[k] for k in _bits(v)}
        rep_maslov.append(degs.pop() if len(degs) == 1 else None)
    return HomologySummary(
        dim=len(reps),
        cycle_reps=tuple(v for _, v in reps),
        boundary_rank=len(red.pivots),
        cycle_rank=len(red.cycles),
        rep_maslov=tuple(rep_maslov),
        _rep_by_top={j: v for j, v in reps},
        _rep_slot={j: k for k, (j, _) in enumerate(reps)},
        _bd_by_top=dict(red.pivots),
    )


def homology(region: RegionComplex) -> HomologySummary:
    return homology_of_boundary(region.boundary, region.maslov)


@dataclass(frozen=True)
class InducedMap:
    matrix_on_homology: F2Matrix
    rank: int
    surjective: bool
    injective: bool


def induced_map_from(
    matrix: F2Matrix,
    d_domain: F2Matrix,
    d_codomain: F2Matrix,
    h_domain: HomologySummary | None = None,
    h_codomain: HomologySummary | None = None,
) -> InducedMap:
    if not ((matrix @ d_domain).columns == (d_codomain @ matrix).columns):
        raise NotChainMap("map does not commute with the boundaries")
    h_dom = h_domain or homology_of_boundary(d_domain)
    h_cod = h_codomain or homology_of_boundary(d_codomain)
    cols = tuple(h_cod.coordinates(matrix.apply(z)) for z in h_dom.cycle_reps)
    on_h = F2Matrix(h_cod.dim, h_dom.dim, cols)
    r = rank(on_h)
    return InducedMap(on_h, r, surjective=r == h_cod.dim, injective=r == h_dom.dim)


def induced_map(f: ChainMap) -> InducedMap:
    return induced_map_from(
        f.matrix, f.domain.boundary, f.codomain.boundary, homology(f.domain), homology(f.codomain)
    )


def _bits(v: int):
    while v:
        low = v & -v
        yield low.bit_length() - 1
        v ^= low


def brute_force_homology_dim(boundary: F2Matrix) -> int:
    """dim ker - dim im by enumerating all 2^d vectors. Only for small d."""
    d = boundary.cols
    if d > 16:
        raise ValueError("too large for enumeration")
    kernel = 0
    image: set[int] = set()
    for v in range(1 << d):
        w = boundary.apply(v)
        image.add(w)
        if w == 0:
            kernel += 1
    # both are subgroups of (F2)^d, so sizes are powers of two
    return kernel.bit_length() - len(image).bit_length()
