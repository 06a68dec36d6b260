import pytest

from intertwine.corpus import (
    circle_complex,
    genus2_complex,
    klein_complex,
    rp2_complex,
    sphere_complex,
    torus_complex,
)
from intertwine.fields import FieldSpec, RATIONALS
from intertwine.rings import tensor_power
from intertwine.simplicial import (
    ComplexError,
    SimplicialComplex,
    betti_numbers,
    cochain_complex,
    cohomology_ring,
)

GF2 = FieldSpec(2)
GF3 = FieldSpec(3)


def test_sphere_cochain_dimensions():
    cc = cochain_complex(sphere_complex(), RATIONALS)
    assert cc.dims() == (4, 6, 4)


def test_filled_triangle_coboundary_rank():
    K = SimplicialComplex.create("disk", 3, [(0, 1, 2)])
    cc = cochain_complex(K, RATIONALS)
    from intertwine.fields import rank

    assert rank(RATIONALS, cc.coboundaries[0]) == 2
    assert betti_numbers(cc) == (1, 0, 0)


def test_torus_face_counts_and_euler():
    K = torus_complex()
    simps = K.simplices()
    assert tuple(len(s) for s in simps) == (7, 21, 14)
    assert K.euler_characteristic() == 0


@pytest.mark.parametrize("field", [RATIONALS, GF2, GF3])
def test_coboundary_squares_to_zero(field):
    for K in (circle_complex(), sphere_complex(), torus_complex(), rp2_complex()):
        cc = cochain_complex(K, field)
        for d in range(len(cc.coboundaries) - 1):
            low = cc.coboundaries[d]
            high = cc.coboundaries[d + 1]
            for i in range(len(high)):
                for j in range(len(low[0]) if low else 0):
                    acc = field.zero
                    for k in range(len(low)):
                        acc = field.add(acc, field.mul(high[i][k], low[k][j]))
                    assert field.is_zero(acc)


def test_betti_numbers_match_across_fields_without_torsion():
    for K in (circle_complex(), sphere_complex(), torus_complex()):
        bq = betti_numbers(cochain_complex(K, RATIONALS))
        for field in (GF2, GF3):
            assert betti_numbers(cochain_complex(K, field)) == bq


def test_euler_characteristic_equals_alternating_betti_sum():
    for K in (circle_complex(), sphere_complex(), torus_complex(),
              genus2_complex(), rp2_complex(), klein_complex()):
        betti = betti_numbers(cochain_complex(K, RATIONALS))
        assert K.euler_characteristic() == sum(
            (-1) ** d * b for d, b in enumerate(betti)
        )


def test_circle_ring():
    ring = cohomology_ring(circle_complex(), RATIONALS)
    assert ring.dims == (1, 1)
    x = ring.basis_element(1, 0)
    assert ring.is_zero(ring.mul(x, x))


def test_sphere_ring_generator_squares_to_zero():
    ring = cohomology_ring(sphere_complex(), RATIONALS)
    assert ring.dims == (1, 0, 1)
    y = ring.basis_element(2, 0)
    assert ring.is_zero(ring.mul(y, y))


def test_torus_ring_matches_kunneth_of_circle():
    """Full cochain-level torus ring against the circle tensor square."""
    torus = cohomology_ring(torus_complex(), RATIONALS)
    assert torus.dims == (1, 2, 1)
    a = torus.basis_element(1, 0)
    b = torus.basis_element(1, 1)
    assert torus.is_zero(torus.mul(a, a))
    assert torus.is_zero(torus.mul(b, b))
    ab = torus.mul(a, b)
    assert not torus.is_zero(ab)
    model = tensor_power(cohomology_ring(circle_complex(), RATIONALS), 2)
    assert model.dims == torus.dims
    ma = model.basis_element(1, 0)
    mb = model.basis_element(1, 1)
    assert not model.is_zero(model.mul(ma, mb))
    assert model.is_zero(model.mul(ma, ma))
    # graded commutativity with the same sign in both models
    assert torus.mul(b, a)[1][0] == -ab[1][0]


def test_ring_axioms_exact():
    for K in (torus_complex(), genus2_complex(), rp2_complex()):
        for field in (RATIONALS, GF2):
            ring = cohomology_ring(K, field)
            assert ring.check_unit()
            assert ring.check_graded_commutativity()
            assert ring.check_associativity()


def test_rp2_mod2_ring_has_nontrivial_square():
    ring = cohomology_ring(rp2_complex(), GF2)
    assert ring.dims == (1, 1, 1)
    x = ring.basis_element(1, 0)
    assert not ring.is_zero(ring.mul(x, x))


def test_deterministic_basis_choice():
    first = cohomology_ring(torus_complex(), RATIONALS)
    second = cohomology_ring(torus_complex(), RATIONALS)
    assert first == second


def test_disconnected_complex_rejected():
    with pytest.raises(ComplexError, match="disconnected"):
        SimplicialComplex.create("two-points", 4, [(0, 1), (2, 3)])


def test_empty_complex_rejected():
    with pytest.raises(ComplexError, match="empty"):
        SimplicialComplex.create("empty", 0, [])


def test_contained_maximal_simplex_rejected():
    with pytest.raises(ComplexError, match="contained"):
        SimplicialComplex.create("bad", 3, [(0, 1, 2), (0, 1)])


def test_uncovered_vertex_rejected():
    with pytest.raises(ComplexError, match="no maximal simplex"):
        SimplicialComplex.create("gap", 4, [(0, 1, 2)])
