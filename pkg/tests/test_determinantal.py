import random

import pytest

from detindex import (
    INFINITE,
    DetSingularity,
    Ideal,
    OneForm,
    RingContext,
    chi_singular_stratum,
    classify,
    colength,
    minors,
    minors_indexed,
    normal_form,
    parse_poly,
    stabilized_colength,
    standard_basis,
    stratum_dim,
    stratum_ideal,
)

from conftest import random_poly


def P(src, ring):
    return parse_poly(src, ring)


def surface_232(ring):
    return DetSingularity.create(
        ring,
        [[P("z", ring), P("y+u", ring), P("x", ring)],
         [P("u", ring), P("x", ring), P("y", ring)]],
        2,
    )


def generic_232():
    ring = RingContext(tuple("abcdef"))
    rows = [[ring.variable(i) for i in range(3)], [ring.variable(i) for i in range(3, 6)]]
    return DetSingularity.create(ring, rows, 2)


# -- minors ---------------------------------------------------------------------

def test_minors_of_surface_matrix(ring_xyzu):
    sing = surface_232(ring_xyzu)
    polys = minors(sing.matrix, 2)
    expected = {
        P("z*x - u*(y+u)", ring_xyzu),
        P("z*y - u*x", ring_xyzu),
        P("(y+u)*y - x^2", ring_xyzu),
    }
    assert set(polys) == expected


def test_minors_size_one_lists_entries(ring_xyzu):
    sing = surface_232(ring_xyzu)
    polys = minors(sing.matrix, 1)
    assert polys == [entry for row in sing.matrix for entry in row]


def test_minors_diagonal(ring_xy):
    mat = [[P("x", ring_xy), P("0", ring_xy)], [P("0", ring_xy), P("y", ring_xy)]]
    assert minors(mat, 2) == [P("x*y", ring_xy)]


def test_minors_size_out_of_range(ring_xy):
    with pytest.raises(ValueError):
        minors([[P("x", ring_xy)]], 2)


def test_minors_indexed_lexicographic_order(ring_xyzu):
    sing = surface_232(ring_xyzu)
    keys = [key for key, _ in minors_indexed(sing.matrix, 2)]
    assert keys == sorted(keys)


def test_minors_alternating_under_row_swap(ring_xyz):
    rng = random.Random(3)
    for _ in range(10):
        mat = [[random_poly(ring_xyz, rng, max_terms=3, max_deg=2) for _ in range(3)] for _ in range(3)]
        swapped = [mat[1], mat[0], mat[2]]
        original = dict(minors_indexed(mat, 2))
        flipped = dict(minors_indexed(swapped, 2))
        # minors whose row set contains both swapped rows change sign
        assert flipped[((0, 1), (0, 1))] == -original[((0, 1), (0, 1))]
        assert flipped[((0, 1), (1, 2))] == -original[((0, 1), (1, 2))]
        # minors missing one of the swapped rows move place but keep value
        assert flipped[((1, 2), (0, 1))] == original[((0, 2), (0, 1))]


def test_higher_minors_lie_in_lower_minor_ideal(ring_xyz):
    # Laplace expansion: each (i+1)-minor is a combination of i-minors
    rng = random.Random(11)
    for _ in range(5):
        mat = [[random_poly(ring_xyz, rng, max_terms=2, max_deg=1, allow_constant=False)
                for _ in range(3)] for _ in range(3)]
        for i in (1, 2):
            gens = [p for p in minors(mat, i) if p]
            if not gens:
                continue
            basis = standard_basis(Ideal(gens))
            for bigger in minors(mat, i + 1):
                assert basis.normal_form(bigger).is_zero()


# -- the data model ----------------------------------------------------------------

def test_entries_must_vanish_at_origin(ring_xy):
    with pytest.raises(ValueError, match="vanish"):
        DetSingularity.create(ring_xy, [[P("1 + x", ring_xy)]], 1)


def test_expected_dimension_must_be_positive(ring_xy):
    # 2x2 of a 2x2 matrix in two variables: d = 2 - 1 = 1 fine; t = 1: d = 2 - 4 < 0
    mat = [[P("x", ring_xy), P("y", ring_xy)], [P("y", ring_xy), P("x", ring_xy)]]
    with pytest.raises(ValueError, match="positive"):
        DetSingularity.create(ring_xy, mat, 1)
    assert DetSingularity.create(ring_xy, mat, 2).dim == 1


def test_transpose_normalization(ring_xyzu):
    tall = [[P("z", ring_xyzu), P("u", ring_xyzu)],
            [P("y+u", ring_xyzu), P("x", ring_xyzu)],
            [P("x", ring_xyzu), P("y", ring_xyzu)]]
    sing = DetSingularity.create(ring_xyzu, tall, 2)
    assert sing.transposed
    assert (sing.m, sing.n) == (2, 3)
    wide = surface_232(ring_xyzu)
    assert not wide.transposed
    assert set(sing.defining_minors()) == set(wide.defining_minors())


# -- strata ------------------------------------------------------------------------

def test_stratum_ideal_rank_one_is_entry_ideal(ring_xyzu):
    sing = surface_232(ring_xyzu)
    gens = stratum_ideal(sing, 1).generators
    assert [p.render() for p in gens] == ["z", "y + u", "x", "u", "x", "y"]


def test_stratum_ideal_top_is_defining_ideal(ring_xyzu):
    sing = surface_232(ring_xyzu)
    assert list(stratum_ideal(sing, sing.t).generators) == sing.defining_minors()


def test_stratum_ideal_generic_rank_one_is_maximal_ideal():
    sing = generic_232()
    assert colength(stratum_ideal(sing, 1)) == 1


def test_stratum_index_range(ring_xyzu):
    sing = surface_232(ring_xyzu)
    with pytest.raises(ValueError):
        stratum_ideal(sing, 0)
    with pytest.raises(ValueError):
        stratum_ideal(sing, 3)


# -- classification ------------------------------------------------------------------

def test_classify_surface_example(ring_xyzu):
    cls = classify(surface_232(ring_xyzu))
    assert cls.smoothable and cls.isolated
    assert cls.stratum_dims == (0, 2)
    assert cls.sing_stratum_colength_finite is True


def test_classify_generic_boundary_case():
    cls = classify(generic_232())
    assert not cls.smoothable
    assert cls.isolated
    assert cls.stratum_dims == (0, 4)


def test_classify_complete_intersection_format(ring_xyz):
    # one row, t = 1: a complete intersection of codimension n
    sing = DetSingularity.create(ring_xyz, [[P("x^2+y^2+z^2", ring_xyz)]], 1)
    cls = classify(sing)
    assert cls.smoothable and cls.isolated
    assert cls.sing_stratum_colength_finite is None


def test_classify_smoothability_never_appears_when_enlarging_ambient():
    # enlarging N can only destroy smoothability, never create it
    for m in range(1, 4):
        for n in range(m, 4):
            for t in range(1, m + 1):
                bound = (m - t + 2) * (n - t + 2)
                for ambient in range(1, bound + 3):
                    small = ambient < bound
                    bigger = ambient + 1 < bound
                    assert not (bigger and not small)


def test_stratum_dim_formula():
    assert stratum_dim(2, 3, 1, 4) == 0
    assert stratum_dim(2, 3, 2, 4) == 2
    assert stratum_dim(2, 3, 2, 6) == 4
    assert stratum_dim(3, 3, 1, 5) == 0


# -- the count of rank-deficient points ------------------------------------------------

def test_chi_singular_stratum_generic():
    sing = generic_232()
    assert chi_singular_stratum(sing) == 1
    report = stabilized_colength(stratum_ideal(sing, 1))
    assert report.stabilized and report.value == 1


def test_chi_singular_stratum_squared_entry():
    ring = RingContext(tuple("abcdef"))
    rows = [[ring.variable(0), ring.variable(1), ring.variable(2)],
            [ring.variable(3), ring.variable(4), ring.variable(5) ** 2]]
    sing = DetSingularity.create(ring, rows, 2)
    assert chi_singular_stratum(sing) == 2
    report = stabilized_colength(stratum_ideal(sing, 1))
    assert report.stabilized and report.value == 2


def test_chi_singular_stratum_preconditions(ring_xyzu):
    # smoothable case (N=4 < 6): the formula does not apply
    with pytest.raises(ValueError, match="N ="):
        chi_singular_stratum(surface_232(ring_xyzu))
    ring = RingContext(("x", "y"))
    hyper = DetSingularity.create(ring, [[P("x*y", ring)]], 1)
    with pytest.raises(ValueError, match="t = 1"):
        chi_singular_stratum(hyper)


def test_one_form_validation(ring_xy):
    with pytest.raises(ValueError):
        OneForm([ring_xy.variable(0)])  # wrong length
    form = OneForm.differential(P("x^2 + y^2", ring_xy))
    assert [c.render() for c in form.coefficients] == ["2*x", "2*y"]
    dz = OneForm.coordinate(ring_xy, "y")
    assert [c.render() for c in dz.coefficients] == ["0", "1"]
