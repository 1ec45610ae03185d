"""The invariants nu_n, tau, nu^+ and nu^+' computed from a CfkComplex."""

from __future__ import annotations

from dataclasses import dataclass, field

from .complex import CfkComplex, mirror, require_valid, tau
from .f2 import homology, induced_map_from
from .regions import ColumnWindow, MaxWindow, MinWindow, aligned_map, extract


class NoWitness(RuntimeError):
    pass


class StabilizationNotDetected(RuntimeError):
    def __init__(self, result: StableValue):
        self.result = result
        super().__init__(f"no plateau detected up to n = {result.n_used}; last value {result.value}")


@dataclass(frozen=True)
class NuResult:
    n: int
    value: int
    witness_s_set: frozenset[int]
    monotone_flag: bool
    scan_range: tuple[int, int] = (0, 0)


@dataclass(frozen=True)
class StableValue:
    value: int
    n_used: int
    verified: bool


@dataclass
class InvariantProfile:
    name: str
    tau: int
    entries: dict[int, NuResult]
    nu_plus: int
    nu_plus_n_used: int
    nu_plus_prime: int
    nu_plus_prime_n_used: int
    stabilization_verified: bool
    diagnostics: list[str] = field(default_factory=list)

    def values(self) -> dict[int, int]:
        return {n: r.value for n, r in sorted(self.entries.items())}


def scan_range(c: CfkComplex) -> range:
    return range(c.min_alexander - 1, c.max_alexander + 2)


def _verdicts(c: CfkComplex, n: int) -> dict[int, bool]:
    depth = abs(n)
    column = extract(c, ColumnWindow(depth), check=False)
    h_col = homology(column)
    out: dict[int, bool] = {}
    for s in scan_range(c):
        if n > 0:
            dom = extract(c, MaxWindow(s, depth), check=False)
            m = induced_map_from(aligned_map(dom, column), dom.boundary, column.boundary, homology(dom), h_col)
            out[s] = m.surjective
        else:
            cod = extract(c, MinWindow(s, depth), check=False)
            m = induced_map_from(aligned_map(column, cod), column.boundary, cod.boundary, h_col, homology(cod))
            out[s] = m.injective
    return out


def _nu_n(c: CfkComplex, n: int) -> NuResult:
    lo, hi = c.min_alexander - 1, c.max_alexander + 1
    if n == 0:
        v = tau(c)
        return NuResult(0, v, frozenset({v}), True, (lo, hi))
    verdicts = _verdicts(c, n)
    good = sorted(s for s, ok in verdicts.items() if ok)
    if not good:
        raise NoWitness(f"no s in [{lo}, {hi}] gives a {'surjection' if n > 0 else 'injection'} for n = {n}")
    if n > 0:
        value = good[0]
        monotone = good == list(range(value, hi + 1))
    else:
        value = good[-1]
        monotone = good == list(range(lo, value + 1))
    return NuResult(n, value, frozenset(good), monotone, (lo, hi))


def nu_n(c: CfkComplex, n: int) -> NuResult:
    """nu_n by an exhaustive scan of s over [min A - 1, max A + 1].

    n > 0: least s where A^n_s -> B^n is onto in homology.
    n < 0: greatest s where B^|n| -> A^{-|n|}_s is injective in homology.
    n = 0: tau.
    """
    require_valid(c)
    return _nu_n(c, n)


def _stable(c: CfkComplex, plateau: int, n_cap: int) -> StableValue:
    need = c.breadth + 1
    history: list[int] = []
    for n in range(1, n_cap + 1):
        history.append(_nu_n(c, n).value)
        tail = history[-plateau:]
        if n >= need and len(tail) == plateau and len(set(tail)) == 1:
            first = n
            while first > 1 and history[first - 2] == history[-1]:
                first -= 1
            return StableValue(history[-1], first, True)
    return StableValue(history[-1], n_cap, False)


def nu_plus(c: CfkComplex, plateau: int = 3, n_cap: int = 64, strict: bool = False) -> StableValue:
    """Stable value of nu_n as n -> +infinity.

    Stops once the last ``plateau`` values agree and n >= breadth + 1.
    ``verified`` is False if the cap is reached first; with ``strict`` that
    raises StabilizationNotDetected instead.
    """
    require_valid(c)
    res = _stable(c, plateau, n_cap)
    if strict and not res.verified:
        raise StabilizationNotDetected(res)
    return res


def nu_plus_prime(c: CfkComplex, plateau: int = 3, n_cap: int = 64, strict: bool = False) -> StableValue:
    """-nu^+ of the mirror."""
    res = nu_plus(mirror(c), plateau, n_cap, strict)
    return StableValue(-res.value, res.n_used, res.verified)


def profile(c: CfkComplex, n_min: int = -8, n_max: int = 8, plateau: int = 3, n_cap: int = 64) -> InvariantProfile:
    if n_min > n_max:
        raise ValueError(f"n_min {n_min} > n_max {n_max}")
    require_valid(c)
    entries = {n: _nu_n(c, n) for n in range(n_min, n_max + 1)}
    t = entries[0].value if 0 in entries else tau(c)
    plus = _stable(c, plateau, n_cap)
    prime = nu_plus_prime(c, plateau, n_cap)
    diags: list[str] = []
    for n in range(n_min, n_max):
        if entries[n].value > entries[n + 1].value:
            diags.append(f"monotonicity: nu_{n} = {entries[n].value} > nu_{n + 1} = {entries[n + 1].value}")
    for n, r in entries.items():
        if not prime.value <= r.value <= plus.value:
            diags.append(f"boundedness: nu_{n} = {r.value} outside [{prime.value}, {plus.value}]")
        if not r.monotone_flag:
            diags.append(f"verdict set for n = {n} is not monotone in s")
    if not (plus.verified and prime.verified):
        diags.append("stabilization not verified within the cap")
    return InvariantProfile(
        name=c.name,
        tau=t,
        entries=entries,
        nu_plus=plus.value,
        nu_plus_n_used=plus.n_used,
        nu_plus_prime=prime.value,
        nu_plus_prime_n_used=prime.n_used,
        stabilization_verified=plus.verified and prime.verified,
        diagnostics=diags,
    )
