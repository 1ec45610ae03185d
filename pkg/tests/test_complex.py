import pytest

from cfknu.builders import box, staircase, torus, unknot
from cfknu.complex import (
    CfkComplex,
    DiffTerm,
    Generator,
    InvalidComplex,
    Violation,
    direct_sum,
    mirror,
    relabel,
    tau,
    tensor,
    validate,
    vertical_boundary,
    vertical_complex,
)
from cfknu.f2 import homology, homology_of_boundary


def brute_tau(c: CfkComplex) -> int:
    """Least s such that some vector supported on {A <= s} is a cycle but not a boundary
    of the i = 0 column. Enumerates all 2^G vectors."""
    d = vertical_boundary(c)
    g = len(c)
    boundaries = {d.apply(v) for v in range(1 << g)}
    for s in range(c.min_alexander - 1, c.max_alexander + 1):
        mask = sum(1 << k for k, x in enumerate(c.generators) if x.alexander <= s)
        for v in range(1 << g):
            if v & ~mask == 0 and d.apply(v) == 0 and v not in boundaries:
                return s
    return c.max_alexander


def trefoil_by_hand():
    return CfkComplex(
        "trefoil",
        (Generator("z1", 1, 0), Generator("z2", 0, -1), Generator("z3", -1, -2)),
        (DiffTerm("z2", "z1", 1), DiffTerm("z2", "z3", 0)),
    )


def test_unknot_is_valid():
    assert validate(unknot()).valid


def test_trefoil_by_hand_is_valid_and_matches_builder():
    c = trefoil_by_hand()
    assert validate(c).valid
    built = staircase([1, 1])
    assert [(g.alexander, g.maslov) for g in built.generators] == [(g.alexander, g.maslov) for g in c.generators]


def test_negative_u_power_is_reported():
    c = CfkComplex("bad", (Generator("x", 0, 0), Generator("y", 0, -3)), (DiffTerm("x", "y", -1),))
    kinds = validate(c).kinds()
    assert Violation.NEGATIVE_U_POWER in kinds
    assert Violation.FILTRATION in kinds


def test_d_squared_nonzero_is_reported():
    c = CfkComplex(
        "chain",
        (Generator("x", 0, 0), Generator("y", 0, -1), Generator("z", 0, -2)),
        (DiffTerm("x", "y", 0), DiffTerm("y", "z", 0)),
    )
    report = validate(c)
    assert not report.valid
    assert Violation.D_SQUARED in report.kinds()


def test_maslov_and_duplicate_id_violations():
    c = CfkComplex("m", (Generator("x", 0, 0), Generator("x", 0, 0)), ())
    assert Violation.DUPLICATE_ID in validate(c).kinds()
    c = CfkComplex("m", (Generator("x", 0, 0), Generator("y", 0, 0)), (DiffTerm("x", "y", 0),))
    assert Violation.MASLOV in validate(c).kinds()


def test_vertical_homology_condition():
    assert validate(box(0, 0), allow_non_knot=False).kinds() == {Violation.VERTICAL_HOMOLOGY}
    assert validate(box(0, 0)).valid  # box carries the non-knot flag
    shifted = CfkComplex("shift", (Generator("x", 0, 2),), ())
    assert validate(shifted).kinds() == {Violation.VERTICAL_HOMOLOGY}


def test_duplicate_terms_cancel_mod_2():
    t = DiffTerm("z2", "z1", 1)
    c = CfkComplex("t", trefoil_by_hand().generators, (t, t, t, DiffTerm("z2", "z3", 0)))
    assert c.differential == (t, DiffTerm("z2", "z3", 0))


def test_vertical_complex_shapes(t29):
    v = vertical_complex(unknot())
    assert len(v) == 1 and v.boundary.is_zero()
    v = vertical_complex(t29)
    assert len(v) == 9
    arrows = {(v.basis[c].generator, v.basis[r].generator) for c in range(9) for r in range(9) if v.boundary.entry(r, c)}
    # z2->z3, z4->z5, z6->z7, z8->z9 with z_p = b_{p-1}
    assert arrows == {("b1", "b2"), ("b3", "b4"), ("b5", "b6"), ("b7", "b8")}
    h = homology(v)
    assert h.dim == 1 and h.cycle_reps == (1,) and h.rep_maslov == (0,)
    assert homology(vertical_complex(box(0, 0))).dim == 0


def test_box_vertical_reduction_by_hand():
    # columns b, a, d, c: d(b) = d (vertical), d(a) = c; two cancelling pairs
    d = vertical_boundary(box(0, 0))
    assert d.to_dense() == [[0, 0, 0, 0], [0, 0, 0, 0], [1, 0, 0, 0], [0, 1, 0, 0]]
    assert homology_of_boundary(d).dim == 0


@pytest.mark.parametrize("c,expected", [(unknot(), 0), (torus(2, 9), 4), (torus(4, 5), 6), (torus(2, 3), 1)])
def test_tau_values(c, expected):
    assert tau(c) == expected
    assert brute_tau(c) == expected


def test_tau_of_mirror_t29():
    m = mirror(torus(2, 9))
    assert brute_tau(m) == -4
    assert tau(m) == -4


def test_tau_rejects_invalid():
    b = box(0, 0)
    with pytest.raises(InvalidComplex):
        tau(CfkComplex("b", b.generators, b.differential))


def test_mirror_of_trefoil_by_hand():
    m = mirror(trefoil_by_hand())
    assert [(g.id, g.alexander, g.maslov) for g in m.generators] == [("z1", -1, 0), ("z2", 0, 1), ("z3", 1, 2)]
    assert sorted(m.differential) == [DiffTerm("z1", "z2", 1), DiffTerm("z3", "z2", 0)]
    assert validate(m).valid


def test_mirror_is_involution(small_corpus):
    for c in small_corpus:
        assert mirror(mirror(c)).same_as(c)
    assert mirror(unknot()).same_as(unknot())


def test_tau_antisymmetric_under_mirror(small_corpus):
    for c in small_corpus:
        assert brute_tau(mirror(c)) == -tau(c)


def test_tensor_with_unknot_is_identity(small_corpus):
    u = unknot()
    for c in small_corpus:
        t = tensor(u, c)
        back = relabel(t, {f"x*{g.id}": g.id for g in c.generators}, c.name)
        assert back.same_as(c)


def test_tensor_counts_and_tau():
    t = tensor(torus(2, 3), torus(2, 3))
    assert validate(t).valid
    assert tau(t) == 2
    assert len(tensor(torus(2, 7), torus(2, 9))) == 63


def test_tensor_is_valid(small_corpus):
    for a in small_corpus[:6]:
        for b in small_corpus[-6:]:
            assert validate(tensor(a, b)).valid


def test_direct_sum():
    c = torus(2, 9)
    empty = CfkComplex("empty", (), ())
    assert direct_sum(c, empty).same_as(c)
    s = direct_sum(c, box(0, 0))
    assert len(s) == 13
    assert validate(s).valid
    # colliding ids get a suffix
    s2 = direct_sum(box(0, 0), box(1, 0))
    assert [g.id for g in s2.generators][4:] == ["b_1", "a_1", "d_1", "c_1"]
    assert validate(s2, allow_non_knot=True).valid


def test_sum_of_two_knots_fails_knot_condition():
    s = direct_sum(torus(2, 3), unknot())
    assert validate(s).kinds() == {Violation.VERTICAL_HOMOLOGY}


def test_vertical_boundary_matches_region():
    c = torus(3, 4)
    assert vertical_complex(c).boundary.columns == vertical_boundary(c).columns
