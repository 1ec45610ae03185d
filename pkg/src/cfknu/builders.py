"""Model complexes: staircases, torus knots, thin-knot models, boxes, the unknot."""

from __future__ import annotations

from typing import Sequence

from .complex import CfkComplex, DiffTerm, Generator, mirror


class UnsupportedTorusKnot(ValueError):
    pass


class InconsistentMaslov(ValueError):
    pass


def unknot() -> CfkComplex:
    return CfkComplex("unknot", (Generator("x", 0, 0),), ())


def staircase_corners(steps: Sequence[int]) -> list[tuple[int, int]]:
    """Lattice positions (i, j) of b_0 ... b_2k, starting at (0, sum of vertical steps)."""
    if not steps or len(steps) % 2:
        raise ValueError(f"step vector must be nonempty of even length, got {list(steps)}")
    if any(w < 1 for w in steps):
        raise ValueError(f"step widths must be positive, got {list(steps)}")
    i, j = 0, sum(steps[1::2])
    corners = [(i, j)]
    for h, v in zip(steps[::2], steps[1::2]):
        i += h
        corners.append((i, j))
        j -= v
        corners.append((i, j))
    return corners


def staircase(steps: Sequence[int], name: str | None = None) -> CfkComplex:
    """Staircase complex from alternating (horizontal, vertical) step widths.

    ``d b_{2m+1} = U^{h} b_{2m} + b_{2m+2}`` where ``h`` is the horizontal
    width between them.
    """
    corners = staircase_corners(steps)
    ids = [f"b{l}" for l in range(len(corners))]
    diff: list[DiffTerm] = []
    for m, h in enumerate(steps[::2]):
        odd = 2 * m + 1
        diff.append(DiffTerm(ids[odd], ids[odd - 1], h))
        diff.append(DiffTerm(ids[odd], ids[odd + 1], 0))

    # propagate Maslov from M(b_0) = 0 along arrows: M(to) = M(from) - 1 + 2a
    maslov: dict[str, int] = {ids[0]: 0}
    for t in diff:  # arrows come in order b1->b0, b1->b2, b3->b2, ...
        if t.source not in maslov:
            maslov[t.source] = maslov[t.target] + 1 - 2 * t.u_power
        expected = maslov[t.source] - 1 + 2 * t.u_power
        if maslov.setdefault(t.target, expected) != expected:
            raise InconsistentMaslov(f"{t.source}->{t.target}: {maslov[t.target]} != {expected}")

    gens = tuple(Generator(gid, j - i, maslov[gid]) for gid, (i, j) in zip(ids, corners))
    return CfkComplex(name or f"staircase({','.join(map(str, steps))})", gens, tuple(diff))


def torus_steps(p: int, q: int) -> list[int]:
    if p == 2 and q >= 3 and q % 2 == 1:
        return [1] * (q - 1)
    if p >= 2 and q == p + 1:
        steps: list[int] = []
        for k in range(1, p):
            steps += [k, p - k]
        return steps
    raise UnsupportedTorusKnot(f"no staircase available for T({p},{q}); supported: T(2, odd q >= 3) and T(p, p+1)")


def torus(p: int, q: int) -> CfkComplex:
    return staircase(torus_steps(p, q), name=f"T({p},{q})")


def thin_model(tau: int) -> CfkComplex:
    """The staircase summand carrying the homology of a thin knot with the given tau."""
    if tau > 0:
        return torus(2, 2 * tau + 1)
    if tau == 0:
        return unknot()
    m = mirror(torus(2, -2 * tau + 1))
    return CfkComplex(f"thin({tau})", m.generators, m.differential)


def box(alexander_offset: int = 0, maslov_top: int = 0) -> CfkComplex:
    """Acyclic unit square b -> a, b -> d, a -> c, d -> c.

    Drawn with c at (0, offset), a at (0, offset+1), d at (1, offset),
    b at (1, offset+1). ``maslov_top`` is the grading of b at that drawn
    position, so the drawn gradings are (top, top-1, top-1, top-2).
    Stored gradings are the canonical i = 0 translates.
    """
    off, m = alexander_offset, maslov_top
    gens = (
        Generator("b", off, m - 2),
        Generator("a", off + 1, m - 1),
        Generator("d", off - 1, m - 3),
        Generator("c", off, m - 2),
    )
    diff = (
        DiffTerm("b", "a", 1),
        DiffTerm("b", "d", 0),
        DiffTerm("a", "c", 0),
        DiffTerm("d", "c", 1),
    )
    return CfkComplex(f"box({off},{m})", gens, diff, allow_non_knot=True)
