"""The fixed test corpus of model complexes used by the property checks."""

from __future__ import annotations

import random

from .builders import box, torus, unknot
from .complex import CfkComplex, direct_sum, mirror, tensor

TENSOR_SEED = 20170612
N_TENSOR_PAIRS = 6


def base_knots() -> list[CfkComplex]:
    """Unknot, T(2,q) for odd 3 <= q <= 13, T(p,p+1) for 3 <= p <= 6, and all mirrors."""
    knots = [unknot()]
    knots += [torus(2, q) for q in range(3, 14, 2)]
    knots += [torus(p, p + 1) for p in range(3, 7)]
    return knots + [mirror(k) for k in knots[1:]]


def tensor_pairs(seed: int = TENSOR_SEED, count: int = N_TENSOR_PAIRS) -> list[tuple[CfkComplex, CfkComplex]]:
    """Seeded pairs drawn from the members with at most 7 generators."""
    pool = [k for k in base_knots() if len(k) <= 7]
    rng = random.Random(seed)
    return [tuple(rng.sample(pool, 2)) for _ in range(count)]


def tensors(seed: int = TENSOR_SEED, count: int = N_TENSOR_PAIRS) -> list[CfkComplex]:
    return [tensor(a, b) for a, b in tensor_pairs(seed, count)]


def with_box(c: CfkComplex, offset: int = 0) -> CfkComplex:
    return direct_sum(c, box(offset, 0))


def corpus(seed: int = TENSOR_SEED) -> list[CfkComplex]:
    """Base knots, their mirrors and the tensor products (without box summands)."""
    return base_knots() + tensors(seed)
