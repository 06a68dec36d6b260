import pytest

from intertwine.exact import rational
from intertwine.fields import (
    FieldSpec,
    LinearSolver,
    RATIONALS,
    independent_row_indices,
    kernel_basis,
    parse_field,
    rank,
    rref,
)


def test_field_spec_rejects_composite_characteristic():
    with pytest.raises(ValueError):
        FieldSpec(6)


def test_parse_field():
    assert parse_field("q") == RATIONALS
    assert parse_field("2") == FieldSpec(2)
    assert parse_field("Z/5") == FieldSpec(5)


def test_rref_rational():
    F = RATIONALS
    rows = [[F.of(1), F.of(2), F.of(3)], [F.of(2), F.of(4), F.of(7)]]
    red, pivots = rref(F, rows)
    assert pivots == [0, 2]
    assert red[0] == [F.of(1), F.of(2), F.of(0)]
    assert red[1] == [F.of(0), F.of(0), F.of(1)]


def test_kernel_basis_matches_rank_nullity():
    F = RATIONALS
    rows = [[F.of(1), F.of(1), F.of(0)], [F.of(0), F.of(1), F.of(1)]]
    kern = kernel_basis(F, rows, 3)
    assert len(kern) == 3 - rank(F, rows)
    for v in kern:
        for row in rows:
            assert sum(a * b for a, b in zip(row, v)) == 0


def test_prime_field_arithmetic():
    F = FieldSpec(5)
    assert F.mul(3, 4) == 2
    assert F.inv(3) == 2  # 3*2 = 6 = 1 mod 5
    rows = [[1, 2], [2, 4]]
    assert rank(F, rows) == 1


def test_independent_row_indices():
    F = RATIONALS
    rows = [
        [F.of(1), F.of(0)],
        [F.of(2), F.of(0)],
        [F.of(0), F.of(1)],
    ]
    assert independent_row_indices(F, rows) == [0, 2]


def test_linear_solver_solves_and_detects_outside_span():
    F = RATIONALS
    cols = [[F.of(1), F.of(0), F.of(1)], [F.of(0), F.of(1), F.of(1)]]
    solver = LinearSolver(F, cols)
    coeffs = solver.solve([F.of(2), F.of(3), F.of(5)])
    assert coeffs == [rational(2), rational(3)]
    assert solver.solve([F.of(1), F.of(0), F.of(0)]) is None
