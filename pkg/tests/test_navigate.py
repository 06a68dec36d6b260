import random

import pytest
from hypothesis import given, strategies as st

from intertwine.errors import DomainError
from intertwine.exact import rational
from intertwine.measures import lp_distance
from intertwine.navigate import (
    SampledPath,
    TimestampScheme,
    circle_navigate,
    join_weights,
    sequential_compose,
    theta_concat,
)
from intertwine.spaces import CIRCLE, LINE
from intertwine.strands import enumerate_resolvers, min_support, pushforward

Q = rational


def line_path(*pts):
    n = len(pts) - 1
    return SampledPath(LINE, tuple((Q(k, n), LINE.point(p)) for k, p in enumerate(pts)))


# -- theta concatenation ------------------------------------------------------

def test_standard_two_path_concatenation():
    glued = theta_concat([line_path(0, 1), line_path(1, 5)], TimestampScheme.of([2]))
    assert glued.at(Q(1, 2)) == LINE.point(1)
    assert glued.at(Q(0)) == LINE.point(0)
    assert glued.at(Q(1)) == LINE.point(5)
    assert glued.at(Q(1, 4)) == LINE.point(Q(1, 2))


def test_three_path_concatenation_breakpoints():
    scheme = TimestampScheme.of([3, Q(3, 2)])
    assert scheme.breakpoints == (Q(1, 3), Q(2, 3))
    glued = theta_concat([line_path(0, 1), line_path(1, 3), line_path(3, 0)], scheme)
    assert glued.at(Q(1, 3)) == LINE.point(1)
    assert glued.at(Q(2, 3)) == LINE.point(3)
    # the middle path occupies [1/3, 2/3]: halfway through it at t = 1/2
    assert glued.at(Q(1, 2)) == LINE.point(2)


def test_concatenating_constant_paths_is_constant():
    c = line_path(4, 4)
    glued = theta_concat([c, c, c], TimestampScheme.uniform(3))
    for k in range(9):
        assert glued.at(Q(k, 8)) == LINE.point(4)


def test_endpoint_mismatch_rejected():
    with pytest.raises(DomainError, match="endpoint"):
        theta_concat([line_path(0, 1), line_path(2, 3)], TimestampScheme.of([2]))


def test_scheme_length_mismatch_rejected():
    with pytest.raises(DomainError, match="scheme"):
        theta_concat([line_path(0, 1), line_path(1, 2)], TimestampScheme.of([3, Q(3, 2)]))


def test_scheme_must_descend():
    with pytest.raises(DomainError, match="descend"):
        TimestampScheme.of([2, 2])
    with pytest.raises(DomainError, match="exceed"):
        TimestampScheme.of([1])


# -- join weights --------------------------------------------------------------

def test_join_weights_two_waypoints_closed_form():
    t = Q(1, 3)
    w1, w2 = join_weights(2, t)
    assert w1 == Q(4, 9) / (Q(4, 9) + Q(1, 9))
    assert w1 + w2 == 1
    assert join_weights(2, Q(1, 2)) == (Q(1, 2), Q(1, 2))


def test_join_weights_delta_at_timestamps():
    for m in range(2, 9):
        for i in range(m):
            ws = join_weights(m, Q(i, m - 1))
            assert ws[i] == 1
            assert all(w == 0 for j, w in enumerate(ws) if j != i)


@given(st.integers(2, 8), st.fractions(min_value=0, max_value=1))
def test_join_weights_partition_of_unity(m, t):
    ws = join_weights(m, Q(t.numerator, t.denominator))
    assert sum(ws) == 1
    assert all(0 <= w <= 1 for w in ws)


# -- circle navigation ------------------------------------------------------------

def test_circle_navigate_same_point_is_constant_dirac():
    samples, diagram = circle_navigate(CIRCLE.point(Q(1, 3)), CIRCLE.point(Q(1, 3)))
    assert all(mu.is_dirac() for _t, mu in samples)
    assert min_support(diagram) == 1


def test_circle_navigate_antipodal_midpoint():
    samples, _d = circle_navigate(CIRCLE.point(0), CIRCLE.point(Q(1, 2)))
    mid = dict(samples)[Q(1, 2)]
    atoms = {p.key(): w for p, w in mid.atoms}
    assert atoms == {CIRCLE.point(Q(1, 4)).key(): Q(1, 2),
                     CIRCLE.point(Q(3, 4)).key(): Q(1, 2)}


def test_circle_navigate_endpoints_are_diracs():
    samples, _d = circle_navigate(CIRCLE.point(Q(1, 8)), CIRCLE.point(Q(5, 8)))
    assert samples[0][1].is_dirac() and samples[-1][1].is_dirac()


def test_circle_navigate_measures_match_diagram_pushforward():
    samples, diagram = circle_navigate(CIRCLE.point(0), CIRCLE.point(Q(1, 4)))
    for resolver in enumerate_resolvers(diagram, 2).all_vertices:
        again = pushforward(resolver, diagram, [t for t, _m in samples])
        assert again == [mu for _t, mu in samples]


def test_circle_navigate_continuity_probe():
    """Perturbing the goal by h moves every sampled measure by O(h)."""
    x = CIRCLE.point(0)
    base, _ = circle_navigate(x, CIRCLE.point(Q(1, 4)))
    for h in (Q(1, 10), Q(1, 100), Q(1, 1000)):
        moved, _ = circle_navigate(x, CIRCLE.point(Q(1, 4) + h))
        worst = max(
            lp_distance(mu, nu)
            for (_t, mu), (_s, nu) in zip(base, moved)
        )
        assert worst <= float(h) * 7.0  # 2*pi*h plus tolerance slack


# -- sequential composition --------------------------------------------------------

def test_sequential_compose_hits_waypoints_as_diracs():
    pts = [CIRCLE.point(0), CIRCLE.point(Q(1, 8)), CIRCLE.point(Q(1, 2))]
    samples, diagram = sequential_compose(circle_navigate, pts)
    lookup = dict(samples)
    for stamp, p in zip((Q(0), Q(1, 2), Q(1)), pts):
        mu = lookup[stamp]
        assert mu.is_dirac()
        assert mu.atoms[0][0].key() == p.key()
    assert min_support(diagram) == 2


def test_sequential_compose_two_waypoints_reduces_to_pairwise():
    direct = circle_navigate(CIRCLE.point(0), CIRCLE.point(Q(1, 4)))
    composed = sequential_compose(circle_navigate,
                                  [CIRCLE.point(0), CIRCLE.point(Q(1, 4))])
    assert composed[1] == direct[1]
    assert composed[0] == direct[0]


def test_sequential_compose_constant_waypoints():
    p = CIRCLE.point(Q(3, 8))
    _samples, diagram = sequential_compose(circle_navigate, [p, p, p])
    assert min_support(diagram) == 1


def test_sequential_compose_random_triples_need_two_strands():
    rng = random.Random(2718)
    for _ in range(50):
        pts = []
        while len({q.key() for q in pts}) < 3:
            pts = [CIRCLE.point(Q(rng.randrange(0, 64), 64)) for _ in range(3)]
        _samples, diagram = sequential_compose(circle_navigate, pts)
        assert min_support(diagram) == 2


def test_sequential_compose_quadruple():
    pts = [CIRCLE.point(Q(k, 5)) for k in range(4)]
    samples, diagram = sequential_compose(circle_navigate, pts)
    lookup = dict(samples)
    for i, p in enumerate(pts):
        mu = lookup[Q(i, 3)]
        assert mu.is_dirac() and mu.atoms[0][0].key() == p.key()
    assert min_support(diagram) == 2
