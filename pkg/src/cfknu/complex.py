"""Bifiltered knot Floer complexes CFK^infty over F2[U, U^-1].

A generator ``x`` sits canonically at lattice position ``(0, A(x))``. The
differential term ``U^a y`` in ``dx`` is the arrow ``(x, t) -> (y, t - a)``
between translates, where translate ``t`` lives at ``(t, t + A(x))`` with
Maslov grading ``M(x) + 2t``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from itertools import product

from .f2 import F2Matrix, homology_of_boundary


class InvalidComplex(ValueError):
    def __init__(self, report: ValidationReport):
        self.report = report
        super().__init__("; ".join(f"{k.value}: {d}" for k, d in report.violations))


@dataclass(frozen=True)
class Generator:
    id: str
    alexander: int
    maslov: int


@dataclass(frozen=True, order=True)
class DiffTerm:
    source: str
    target: str
    u_power: int


def reduce_mod2(terms) -> tuple[DiffTerm, ...]:
    """Cancel duplicate terms pairwise; keeps first-seen order of survivors."""
    counts = Counter(terms)
    seen: set[DiffTerm] = set()
    out = []
    for t in terms:
        if t in seen:
            continue
        seen.add(t)
        if counts[t] % 2:
            out.append(t)
    return tuple(out)


@dataclass(frozen=True)
class CfkComplex:
    name: str
    generators: tuple[Generator, ...]
    differential: tuple[DiffTerm, ...]
    allow_non_knot: bool = False
    _index: dict[str, int] = field(default_factory=dict, init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "generators", tuple(self.generators))
        object.__setattr__(self, "differential", reduce_mod2(tuple(self.differential)))
        self._index.update({g.id: k for k, g in enumerate(self.generators)})

    def __len__(self) -> int:
        return len(self.generators)

    def index(self, gid: str) -> int:
        return self._index[gid]

    def gen(self, gid: str) -> Generator:
        return self.generators[self._index[gid]]

    @property
    def min_alexander(self) -> int:
        return min(g.alexander for g in self.generators)

    @property
    def max_alexander(self) -> int:
        return max(g.alexander for g in self.generators)

    @property
    def max_u_power(self) -> int:
        return max((t.u_power for t in self.differential), default=0)

    @property
    def breadth(self) -> int:
        return self.max_alexander - self.min_alexander + self.max_u_power

    def arrows_from(self) -> list[list[tuple[int, int]]]:
        """Per generator index, the list of (target index, u_power)."""
        out: list[list[tuple[int, int]]] = [[] for _ in self.generators]
        for t in self.differential:
            out[self._index[t.source]].append((self._index[t.target], t.u_power))
        return out

    def same_as(self, other: CfkComplex) -> bool:
        """Equal gradings and equal differential multisets, ignoring the name."""
        return (
            self.generators == other.generators
            and sorted(self.differential) == sorted(other.differential)
        )


class Violation(str, Enum):
    DUPLICATE_ID = "DuplicateId"
    NEGATIVE_U_POWER = "NegativeUPower"
    FILTRATION = "FiltrationViolation"
    MASLOV = "MaslovViolation"
    D_SQUARED = "DSquaredNonzero"
    VERTICAL_HOMOLOGY = "VerticalHomologyWrong"
    UNKNOWN_GENERATOR = "UnknownGenerator"


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[tuple[Violation, str], ...] = ()

    @property
    def valid(self) -> bool:
        return not self.violations

    def kinds(self) -> set[Violation]:
        return {k for k, _ in self.violations}


def _structural_violations(c: CfkComplex) -> list[tuple[Violation, str]]:
    out: list[tuple[Violation, str]] = []
    ids = Counter(g.id for g in c.generators)
    for gid, k in ids.items():
        if k > 1:
            out.append((Violation.DUPLICATE_ID, f"id {gid!r} appears {k} times"))
    grade = {g.id: g for g in c.generators}
    for t in c.differential:
        if t.source not in grade or t.target not in grade:
            out.append((Violation.UNKNOWN_GENERATOR, f"{t.source}->{t.target} references an unknown id"))
            continue
        x, y = grade[t.source], grade[t.target]
        if t.u_power < 0:
            out.append((Violation.NEGATIVE_U_POWER, f"{x.id}->{y.id} has u_power {t.u_power}"))
        if t.u_power + x.alexander - y.alexander < 0:
            out.append(
                (Violation.FILTRATION, f"{x.id}->{y.id} raises the j filtration by {y.alexander - x.alexander - t.u_power}")
            )
        if y.maslov - 2 * t.u_power != x.maslov - 1:
            out.append(
                (Violation.MASLOV, f"{x.id}->{y.id}: M(to) - 2a = {y.maslov - 2 * t.u_power}, expected {x.maslov - 1}")
            )
    if any(k == Violation.UNKNOWN_GENERATOR for k, _ in out):
        return out
    # d^2 = 0: count two-step paths x -> y -> z by total U power
    step: dict[str, list[tuple[str, int]]] = {}
    for t in c.differential:
        step.setdefault(t.source, []).append((t.target, t.u_power))
    paths: Counter = Counter()
    for x, outs in step.items():
        for y, a in outs:
            for z, b in step.get(y, ()):
                paths[(x, z, a + b)] += 1
    for (x, z, p), k in sorted(paths.items()):
        if k % 2:
            out.append((Violation.D_SQUARED, f"d^2 {x} has U^{p}·{z} with odd count {k}"))
    return out


def validate(c: CfkComplex, allow_non_knot: bool | None = None) -> ValidationReport:
    """Check every structural axiom; the knot condition unless waived."""
    out = _structural_violations(c)
    skip_knot = c.allow_non_knot if allow_non_knot is None else allow_non_knot
    if not out and not skip_knot:
        h = homology_of_boundary(vertical_boundary(c), [g.maslov for g in c.generators])
        if h.dim != 1:
            out.append((Violation.VERTICAL_HOMOLOGY, f"vertical homology has dimension {h.dim}, expected 1"))
        elif h.rep_maslov[0] != 0:
            out.append(
                (Violation.VERTICAL_HOMOLOGY, f"vertical homology sits in Maslov grading {h.rep_maslov[0]}, expected 0")
            )
    return ValidationReport(tuple(out))


def require_valid(c: CfkComplex) -> None:
    report = validate(c)
    if not report.valid:
        raise InvalidComplex(report)


def vertical_boundary(c: CfkComplex) -> F2Matrix:
    cols = [0] * len(c)
    for t in c.differential:
        if t.u_power == 0:
            cols[c.index(t.source)] ^= 1 << c.index(t.target)
    return F2Matrix(len(c), len(c), tuple(cols))


def vertical_complex(c: CfkComplex):
    """The column C{i=0} as a region complex (same as the depth-1 column window)."""
    from .regions import ColumnWindow, extract

    return extract(c, ColumnWindow(1), check=False)


def tau(c: CfkComplex) -> int:
    """Least s with C{i=0, j<=s} -> C{i=0} surjective on homology."""
    require_valid(c)
    d = vertical_boundary(c)
    h = homology_of_boundary(d)
    for s in range(c.min_alexander - 1, c.max_alexander + 1):
        mask = 0
        for k, g in enumerate(c.generators):
            if g.alexander <= s:
                mask |= 1 << k
        # the filtration sub-complex is closed under d; a class is hit iff some
        # cycle supported in it represents the generator
        sub = F2Matrix(d.rows, d.cols, tuple(col if (mask >> k) & 1 else 0 for k, col in enumerate(d.columns)))
        hs = homology_of_boundary(sub)
        for z in hs.cycle_reps:
            if z & ~mask == 0 and h.coordinates(z):
                return s
    return c.max_alexander


def mirror(c: CfkComplex) -> CfkComplex:
    """Dual complex: gradings negated, arrows reversed with the same U power."""
    require_valid(c)
    gens = tuple(Generator(g.id, -g.alexander, -g.maslov) for g in c.generators)
    diff = tuple(DiffTerm(t.target, t.source, t.u_power) for t in c.differential)
    return CfkComplex(f"mirror({c.name})", gens, diff, c.allow_non_knot)


def _pair_id(a: str, b: str) -> str:
    return f"{a}*{b}"


def tensor(c1: CfkComplex, c2: CfkComplex) -> CfkComplex:
    """Tensor product over F2[U, U^-1] with the Leibniz differential."""
    require_valid(c1)
    require_valid(c2)
    gens = tuple(
        Generator(_pair_id(x.id, y.id), x.alexander + y.alexander, x.maslov + y.maslov)
        for x, y in product(c1.generators, c2.generators)
    )
    diff: list[DiffTerm] = []
    for t in c1.differential:
        for y in c2.generators:
            diff.append(DiffTerm(_pair_id(t.source, y.id), _pair_id(t.target, y.id), t.u_power))
    for x in c1.generators:
        for t in c2.differential:
            diff.append(DiffTerm(_pair_id(x.id, t.source), _pair_id(x.id, t.target), t.u_power))
    return CfkComplex(f"{c1.name}#{c2.name}", gens, tuple(diff), c1.allow_non_knot or c2.allow_non_knot)


def direct_sum(c1: CfkComplex, c2: CfkComplex) -> CfkComplex:
    """Disjoint union; ids of the second summand colliding with the first get a suffix."""
    taken = {g.id for g in c1.generators}
    rename: dict[str, str] = {}
    for g in c2.generators:
        new = g.id
        k = 1
        while new in taken:
            new = f"{g.id}_{k}"
            k += 1
        taken.add(new)
        rename[g.id] = new
    gens = c1.generators + tuple(Generator(rename[g.id], g.alexander, g.maslov) for g in c2.generators)
    diff = c1.differential + tuple(DiffTerm(rename[t.source], rename[t.target], t.u_power) for t in c2.differential)
    if not c2.generators:
        name = c1.name
    elif not c1.generators:
        name = c2.name
    else:
        name = f"{c1.name}+{c2.name}"
    return CfkComplex(name, gens, diff)


def relabel(c: CfkComplex, mapping: dict[str, str], name: str | None = None) -> CfkComplex:
    gens = tuple(Generator(mapping.get(g.id, g.id), g.alexander, g.maslov) for g in c.generators)
    diff = tuple(
        DiffTerm(mapping.get(t.source, t.source), mapping.get(t.target, t.target), t.u_power) for t in c.differential
    )
    return CfkComplex(name or c.name, gens, diff, c.allow_non_knot)
