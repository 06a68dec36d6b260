import math
import random

import pytest
from hypothesis import given, strategies as st

from intertwine.exact import rational
from intertwine.measures import (
    FiniteMeasure,
    FiniteSet,
    MeasureError,
    dirac,
    hausdorff_distance,
    lp_distance,
    support,
)
from intertwine.spaces import CIRCLE, GraphSpace, LINE, PLANE

Q = rational

TRIANGLE_GRAPH = GraphSpace((
    ("ab", "a", "b", Q(1)),
    ("bc", "b", "c", Q(2)),
    ("ca", "c", "a", Q(2)),
    ("ad", "a", "d", Q(5)),
))


def test_support_of_dirac():
    mu = dirac(LINE, LINE.point(3))
    assert len(support(mu)) == 1
    assert mu.is_dirac()


def test_support_of_two_atom_measure():
    mu = FiniteMeasure.from_pairs(LINE, [(LINE.point(0), Q(1, 2)),
                                         (LINE.point(1), Q(1, 2))])
    assert len(support(mu)) == 2


def test_duplicate_atoms_merge():
    mu = FiniteMeasure.from_pairs(LINE, [(LINE.point(2), Q(1, 4)),
                                         (LINE.point(2), Q(3, 4))])
    assert mu.is_dirac()
    assert mu.atoms[0][1] == 1


def test_weights_must_sum_to_one():
    with pytest.raises(MeasureError, match="sum"):
        FiniteMeasure.from_pairs(LINE, [(LINE.point(0), Q(1, 2))])


def test_canonicalization_is_idempotent():
    pairs = [(LINE.point(1), Q(1, 3)), (LINE.point(0), Q(1, 3)),
             (LINE.point(1), Q(1, 3))]
    once = FiniteMeasure.from_pairs(LINE, pairs)
    twice = FiniteMeasure.from_pairs(LINE, once.atoms)
    assert once == twice


@given(st.lists(st.tuples(st.integers(-8, 8), st.integers(1, 8)),
                min_size=1, max_size=5))
def test_canonicalization_idempotent_property(raw):
    total = sum(Q(1, w) for _x, w in raw)
    pairs = [(LINE.point(x), Q(1, w) / total) for x, w in raw]
    once = FiniteMeasure.from_pairs(LINE, pairs)
    assert FiniteMeasure.from_pairs(LINE, once.atoms) == once


# -- Hausdorff ---------------------------------------------------------------

def test_hausdorff_identity_and_symmetry():
    A = FiniteSet.of(LINE, [LINE.point(0), LINE.point(1)])
    B = FiniteSet.of(LINE, [LINE.point(2)])
    assert hausdorff_distance(A, A) == 0
    assert hausdorff_distance(A, B) == hausdorff_distance(B, A)


def test_hausdorff_singletons_reduce_to_distance():
    A = FiniteSet.of(PLANE, [PLANE.point(0, 0)])
    B = FiniteSet.of(PLANE, [PLANE.point(3, 4)])
    assert hausdorff_distance(A, B) == pytest.approx(5.0)


def test_hausdorff_displayed_formula_example():
    A = FiniteSet.of(LINE, [LINE.point(0), LINE.point(10)])
    B = FiniteSet.of(LINE, [LINE.point(0)])
    assert hausdorff_distance(A, B) == pytest.approx(10.0)


def test_hausdorff_rejects_empty_set():
    with pytest.raises(MeasureError):
        FiniteSet.of(LINE, [])


def test_hausdorff_rejects_mixed_spaces():
    A = FiniteSet.of(LINE, [LINE.point(0)])
    B = FiniteSet.of(PLANE, [PLANE.point(0, 0)])
    with pytest.raises(MeasureError):
        hausdorff_distance(A, B)


# -- Levy-Prokhorov ----------------------------------------------------------

def test_lp_identity():
    mu = FiniteMeasure.from_pairs(LINE, [(LINE.point(0), Q(1, 2)),
                                         (LINE.point(5), Q(1, 2))])
    assert lp_distance(mu, mu) < 1e-9


def test_lp_dirac_pair_formula():
    for x, y in ((0, Q(1, 2)), (0, 3), (1, 1)):
        mu, nu = dirac(LINE, LINE.point(x)), dirac(LINE, LINE.point(y))
        want = min(LINE.distance(LINE.point(x), LINE.point(y)), 1.0)
        assert lp_distance(mu, nu) == pytest.approx(want, abs=2e-9)


def test_lp_half_mass_example():
    # worst set is the far atom: eps >= 1/2 unless the atoms are close
    x, far = LINE.point(0), LINE.point(10)
    mu = FiniteMeasure.from_pairs(LINE, [(x, Q(1, 2)), (far, Q(1, 2))])
    assert lp_distance(mu, dirac(LINE, x)) == pytest.approx(0.5, abs=2e-9)
    near = LINE.point(Q(1, 4))
    mu2 = FiniteMeasure.from_pairs(LINE, [(x, Q(1, 2)), (near, Q(1, 2))])
    assert lp_distance(mu2, dirac(LINE, x)) == pytest.approx(0.25, abs=2e-9)


def test_lp_rejects_mixed_spaces():
    with pytest.raises(MeasureError):
        lp_distance(dirac(LINE, LINE.point(0)), dirac(CIRCLE, CIRCLE.point(0)))


def test_lp_support_cap():
    pairs = [(LINE.point(k), Q(1, 20)) for k in range(20)]
    mu = FiniteMeasure.from_pairs(LINE, pairs)
    with pytest.raises(MeasureError, match="cap"):
        lp_distance(mu, mu)


def test_lp_on_circle_uses_arc_metric():
    mu = dirac(CIRCLE, CIRCLE.point(0))
    nu = dirac(CIRCLE, CIRCLE.point(Q(15, 16)))
    want = min(2 * math.pi / 16, 1.0)
    assert lp_distance(mu, nu) == pytest.approx(want, abs=2e-9)


def test_graph_metric_and_lp():
    g = TRIANGLE_GRAPH
    a, b = g.vertex_point("a"), g.vertex_point("b")
    mid_bc = g.point("bc", Q(1, 2))
    assert g.distance(a, b) == pytest.approx(1.0)
    assert g.distance(a, mid_bc) == pytest.approx(2.0)  # both ways cost 2
    assert g.distance(g.point("ad", Q(1, 5)), a) == pytest.approx(1.0)
    mu = dirac(g, a)
    nu = dirac(g, b)
    assert lp_distance(mu, nu) == pytest.approx(1.0, abs=2e-9)


def _random_measure(rng, space, max_atoms=2):
    k = rng.randint(1, max_atoms)
    if isinstance(space, GraphSpace):
        points = [space.point("bc", Q(rng.randrange(0, 9), 8)) for _ in range(k)]
    elif space is CIRCLE:
        points = [CIRCLE.point(Q(rng.randrange(0, 32), 32)) for _ in range(k)]
    else:
        points = [LINE.point(Q(rng.randrange(-32, 33), 16)) for _ in range(k)]
    cuts = sorted(rng.randrange(1, 8) for _ in range(k - 1))
    weights, prev = [], 0
    for c in cuts + [8]:
        weights.append(Q(c - prev, 8))
        prev = c
    return FiniteMeasure.from_pairs(space, [(p, w) for p, w in zip(points, weights)
                                            if w > 0])


def test_lp_metric_axioms_randomized():
    """10^4 random triples: identity, exact symmetry, triangle within 2e-9."""
    rng = random.Random(411)
    spaces = [LINE, CIRCLE, TRIANGLE_GRAPH]
    for i in range(10_000):
        space = spaces[i % 3]
        mu = _random_measure(rng, space)
        nu = _random_measure(rng, space)
        rho = _random_measure(rng, space)
        dmn = lp_distance(mu, nu)
        if i % 5 == 0:
            assert lp_distance(nu, mu) == dmn
            assert lp_distance(mu, mu) < 1e-9
        assert lp_distance(mu, rho) <= dmn + lp_distance(nu, rho) + 2e-9


def test_hausdorff_metric_axioms_randomized():
    rng = random.Random(412)
    for i in range(10_000):
        pts = [LINE.point(Q(rng.randrange(-32, 33), 16)) for _ in range(6)]
        A = FiniteSet.of(LINE, pts[0:2])
        B = FiniteSet.of(LINE, pts[2:4])
        C = FiniteSet.of(LINE, pts[4:6])
        assert hausdorff_distance(A, A) == 0
        assert hausdorff_distance(A, B) == hausdorff_distance(B, A)
        assert (hausdorff_distance(A, C)
                <= hausdorff_distance(A, B) + hausdorff_distance(B, C) + 2e-9)


def test_lp_dirac_bounded_by_distance_randomized():
    rng = random.Random(413)
    for _ in range(300):
        x = LINE.point(Q(rng.randrange(-16, 17), 8))
        y = LINE.point(Q(rng.randrange(-16, 17), 8))
        d = LINE.distance(x, y)
        got = lp_distance(dirac(LINE, x), dirac(LINE, y))
        assert got <= d + 2e-9
        if d <= 1:
            assert got == pytest.approx(d, abs=2e-9)
