import random

import pytest

from intertwine.corpus import (
    circle_complex,
    cp2_ring,
    product_of_spheres_ring,
    sphere_complex,
    wedge_two_circles_complex,
)
from intertwine.exact import rational
from intertwine.fields import FieldSpec, RATIONALS
from intertwine.rings import (
    GradedAlgebra,
    SearchLimits,
    cup_length,
    diagonal_kernel,
    has_nonzero_positive_degree,
    load_ring,
    save_ring,
    tensor_power,
    zero_divisor_cup_length,
)
from intertwine.simplicial import cohomology_ring

Q = rational


def circle_ring():
    return cohomology_ring(circle_complex(), RATIONALS)


def sphere_ring():
    return cohomology_ring(sphere_complex(), RATIONALS)


def wedge_ring():
    return cohomology_ring(wedge_two_circles_complex(), RATIONALS)


def point_ring():
    return GradedAlgebra("pt", RATIONALS, (1,), (("1",),), ())


# -- cup length -------------------------------------------------------------

def test_cup_length_circle_is_one():
    assert cup_length(circle_ring()).value == 1


def test_cup_length_torus_is_two(rings):
    assert cup_length(rings["T2"]).value == 2


def test_cup_length_product_of_spheres_is_two():
    for k1, k2 in ((2, 2), (3, 3), (2, 3)):
        ring = product_of_spheres_ring(f"S{k1}xS{k2}", k1, k2, RATIONALS)
        assert cup_length(ring).value == 2


def test_cup_length_cp2_is_two():
    assert cup_length(cp2_ring(RATIONALS)).value == 2


def test_cup_length_of_point_ring_is_zero():
    assert cup_length(point_ring()).value == 0


def test_cup_length_of_tensor_powers_is_additive_for_one_relator_rings():
    for base in (circle_ring(), sphere_ring()):
        cl1 = cup_length(base).value
        for m in (2, 3):
            assert cup_length(tensor_power(base, m)).value == m * cl1


# -- tensor powers ----------------------------------------------------------

def test_tensor_power_dims_circle_squared():
    assert tensor_power(circle_ring(), 2).dims == (1, 2, 1)


def test_tensor_power_dims_sphere_cubed():
    assert tensor_power(sphere_ring(), 3).dims == (1, 0, 3, 0, 3, 0, 1)


def test_tensor_power_one_is_identity():
    ring = circle_ring()
    assert tensor_power(ring, 1) is ring


def test_koszul_sign_rule():
    T = tensor_power(circle_ring(), 2)
    # labels are "x|y": a(x)1 is "h1_0|1", 1(x)a is "1|h1_0"
    a1 = T.labels[1].index("h1_0|1")
    onea = T.labels[1].index("1|h1_0")
    left = T.mul(T.basis_element(1, a1), T.basis_element(1, onea))
    right = T.mul(T.basis_element(1, onea), T.basis_element(1, a1))
    assert not T.is_zero(left)
    assert left[1] == tuple(-c for c in right[1])  # odd*odd anticommute


def test_tensor_power_rejects_zero():
    with pytest.raises(Exception):
        tensor_power(circle_ring(), 0)


# -- diagonal kernel --------------------------------------------------------

def test_circle_kernel_is_antidiagonal():
    ring = circle_ring()
    kern = diagonal_kernel(ring, 2)
    assert kern.dimension(0) == 0
    assert kern.dimension(1) == 1
    T = kern.algebra
    (vec,) = kern.vectors[1]
    a1 = T.labels[1].index("h1_0|1")
    onea = T.labels[1].index("1|h1_0")
    assert vec[a1] == -vec[onea] != 0


def test_degree_zero_kernel_trivial_everywhere(rings):
    for ring in rings.values():
        assert diagonal_kernel(ring, 2).dimension(0) == 0


def test_sphere_kernel_degree_two():
    kern = diagonal_kernel(sphere_ring(), 2)
    assert kern.dimension(2) == 1


def test_kernel_is_an_ideal_spot_check():
    ring = wedge_ring()
    kern = diagonal_kernel(ring, 2)
    T = kern.algebra
    mult_cols = {}
    for d, vecs in enumerate(kern.vectors):
        for vec in vecs:
            el = (d, vec)
            for lab, b in T.positive_basis():
                prod = T.mul(el, b)
                if T.is_zero(prod):
                    continue
                # the product must again lie in the kernel of multiplication
                deg = prod[0]
                others = {v for v in kern.vectors[deg]} if deg < len(kern.vectors) else set()
                from intertwine.fields import rank

                rows = [list(v) for v in others]
                base_rank = rank(RATIONALS, rows) if rows else 0
                rows.append(list(prod[1]))
                assert rank(RATIONALS, rows) == base_rank
                mult_cols[(d, lab)] = True
    assert mult_cols


# -- zero-divisor cup length ------------------------------------------------

def test_zcl_circle_is_one():
    assert zero_divisor_cup_length(circle_ring(), 2).value == 1


def test_zcl_sphere_is_two():
    res = zero_divisor_cup_length(sphere_ring(), 2)
    assert res.value == 2 and not res.truncated


def test_zcl_wedge_of_circles_is_two():
    assert zero_divisor_cup_length(wedge_ring(), 2).value == 2


def test_zcl_odd_product_is_two():
    ring = product_of_spheres_ring("S3xS3", 3, 3, RATIONALS)
    assert zero_divisor_cup_length(ring, 2).value == 2


def test_zcl_bounded_by_tensor_cup_length(rings):
    for ring in rings.values():
        for m in (2, 3):
            zcl = zero_divisor_cup_length(ring, m).value
            cl = cup_length(tensor_power(ring, m)).value
            assert zcl <= cl


def test_zcl_monotone_in_m(rings):
    for name in ("S1", "S2", "T2", "wedge2S1"):
        ring = rings[name]
        assert (zero_divisor_cup_length(ring, 2).value
                <= zero_divisor_cup_length(ring, 3).value)


def test_zcl_characteristic_dependence():
    # the even-sphere witness square is -2 x(x)x, which dies mod 2
    ring2 = cohomology_ring(sphere_complex(), FieldSpec(2))
    assert zero_divisor_cup_length(ring2, 2).value == 1
    assert zero_divisor_cup_length(sphere_ring(), 2).value == 2


def test_search_budget_flags_truncation():
    ring = tensor_power(wedge_ring(), 2)
    res = cup_length(ring, SearchLimits(max_len=8, node_budget=3))
    assert res.truncated
    assert res.value >= 1  # still a valid lower bound


def test_max_len_flags_truncation():
    ring = tensor_power(circle_ring(), 3)  # true cup length 3
    res = cup_length(ring, SearchLimits(max_len=2, node_budget=10**6))
    assert res.value == 2 and res.truncated


def test_random_products_never_beat_basis_search(rings):
    rng = random.Random(7)
    for name in ("S1", "T2", "wedge2S1"):
        ring = rings[name]
        cl = cup_length(ring).value
        basis = ring.positive_basis()
        found_max = 0
        for _ in range(200):
            length = rng.randint(1, cl + 1)
            prod = ring.unit()
            for _k in range(length):
                deg = rng.choice([d for d in range(1, ring.top_degree + 1)
                                  if ring.dims[d]])
                coeffs = [Q(rng.randint(-3, 3)) for _ in range(ring.dims[deg])]
                prod = ring.mul(prod, ring.element(deg, coeffs))
            if not ring.is_zero(prod):
                found_max = max(found_max, length)
        assert found_max <= cl
        if cl:
            assert found_max >= cl - 0  # random search reaches the basis answer
    assert basis  # sanity: loop ran


def test_has_nonzero_positive_degree(rings):
    assert has_nonzero_positive_degree(rings["S1"]) == (True, 1)
    assert has_nonzero_positive_degree(rings["S2"]) == (True, 2)
    assert has_nonzero_positive_degree(point_ring()) == (False, None)


def test_ring_file_roundtrip(tmp_path):
    ring = product_of_spheres_ring("S2xS3", 2, 3, RATIONALS)
    path = tmp_path / "r.ring"
    save_ring(ring, path)
    loaded = load_ring(path)
    assert loaded.dims == ring.dims
    assert loaded.labels == ring.labels
    assert loaded.products == ring.products
    assert cup_length(loaded).value == 2
