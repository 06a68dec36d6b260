"""Coefficient fields and exact linear algebra.

Two kinds of field are supported: the rationals and prime fields Z/p.
Field elements are raw values (rationals resp. ints in [0, p)); a FieldSpec
object carries the arithmetic so that vectors and matrices stay plain
tuples/lists.  Everything here is exact; there is no floating point.

The linear algebra is plain Gauss-Jordan with deterministic pivoting
(first nonzero entry in row order), which fixes the echelon bases used for
cohomology representatives across runs.
"""

from __future__ import annotations

from dataclasses import dataclass

from .exact import rational


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class FieldSpec:
    """The rationals (p == 0) or the prime field Z/p (p prime)."""

    p: int = 0

    def __post_init__(self):
        if self.p != 0 and not _is_prime(self.p):
            raise ValueError(f"field characteristic must be 0 or prime, got {self.p}")

    # -- element arithmetic ------------------------------------------------
    @property
    def zero(self):
        return 0 if self.p else rational(0)

    @property
    def one(self):
        return 1 if self.p else rational(1)

    def of(self, n: int):
        return n % self.p if self.p else rational(n)

    def add(self, a, b):
        return (a + b) % self.p if self.p else a + b

    def sub(self, a, b):
        return (a - b) % self.p if self.p else a - b

    def mul(self, a, b):
        return (a * b) % self.p if self.p else a * b

    def neg(self, a):
        return (-a) % self.p if self.p else -a

    def inv(self, a):
        if self.p:
            return pow(a, self.p - 2, self.p)
        return 1 / a

    def is_zero(self, a) -> bool:
        return a == 0

    # -- presentation ------------------------------------------------------
    @property
    def label(self) -> str:
        return "Q" if self.p == 0 else f"Z/{self.p}"

    def __str__(self):
        return self.label


RATIONALS = FieldSpec(0)


def parse_field(text: str) -> FieldSpec:
    s = str(text).strip().lower()
    if s in ("q", "0", "rationals", "rational"):
        return RATIONALS
    if s.startswith("z/"):
        s = s[2:]
    return FieldSpec(int(s))


# ---------------------------------------------------------------------------
# Vectors and matrices: matrices are lists of row lists of field elements.
# ---------------------------------------------------------------------------

def zero_vector(F: FieldSpec, n: int) -> list:
    return [F.zero] * n


def vec_add_scaled(F: FieldSpec, u: list, v: list, c) -> list:
    """u + c*v"""
    return [F.add(a, F.mul(c, b)) for a, b in zip(u, v)]


def vec_scale(F: FieldSpec, u: list, c) -> list:
    return [F.mul(c, a) for a in u]


def vec_is_zero(F: FieldSpec, u) -> bool:
    return all(F.is_zero(a) for a in u)


def rref(F: FieldSpec, rows: list) -> tuple[list, list[int]]:
    """Reduced row echelon form.  Returns (nonzero rows, pivot columns)."""
    mat = [list(r) for r in rows]
    pivots: list[int] = []
    r = 0
    ncols = len(mat[0]) if mat else 0
    for c in range(ncols):
        pivot_row = None
        for i in range(r, len(mat)):
            if not F.is_zero(mat[i][c]):
                pivot_row = i
                break
        if pivot_row is None:
            continue
        mat[r], mat[pivot_row] = mat[pivot_row], mat[r]
        inv = F.inv(mat[r][c])
        mat[r] = vec_scale(F, mat[r], inv)
        for i in range(len(mat)):
            if i != r and not F.is_zero(mat[i][c]):
                mat[i] = vec_add_scaled(F, mat[i], mat[r], F.neg(mat[i][c]))
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    return mat[:r], pivots


def rank(F: FieldSpec, rows: list) -> int:
    return len(rref(F, rows)[0])


def kernel_basis(F: FieldSpec, rows: list, ncols: int) -> list[list]:
    """Basis of {x : M x = 0}, one vector per free column, deterministic."""
    red, pivots = rref(F, rows) if rows else ([], [])
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        v = zero_vector(F, ncols)
        v[free] = F.one
        for r, pc in zip(red, pivots):
            v[pc] = F.neg(r[free])
        basis.append(v)
    return basis


def independent_row_indices(F: FieldSpec, rows: list) -> list[int]:
    """Indices of a maximal independent subset of rows (greedy, in order)."""
    kept: list[list] = []
    kept_pivots: list[int] = []
    out = []
    for idx, row in enumerate(rows):
        v = list(row)
        for kr, kp in zip(kept, kept_pivots):
            if not F.is_zero(v[kp]):
                v = vec_add_scaled(F, v, kr, F.neg(v[kp]))
        piv = next((c for c, a in enumerate(v) if not F.is_zero(a)), None)
        if piv is None:
            continue
        v = vec_scale(F, v, F.inv(v[piv]))
        kept.append(v)
        kept_pivots.append(piv)
        out.append(idx)
    return out


class LinearSolver:
    """Repeated solves of  A c = v  for a fixed column family A.

    Columns are given as vectors; solve() returns the coefficient list or
    None when v is outside the span.  Used to express cocycles in a chosen
    cohomology basis modulo coboundaries.
    """

    def __init__(self, F: FieldSpec, columns: list):
        self.F = F
        self.ncols = len(columns)
        self.nrows = len(columns[0]) if columns else 0
        # Row-reduce [A^T | I] so solving is a reduction of v against the rows.
        aug = []
        for j, col in enumerate(columns):
            unit = zero_vector(F, self.ncols)
            unit[j] = F.one
            aug.append(list(col) + unit)
        self._rows, self._pivots = rref(F, aug) if aug else ([], [])

    def solve(self, v: list):
        F = self.F
        work = list(v) + zero_vector(F, self.ncols)
        for row, pc in zip(self._rows, self._pivots):
            if pc >= self.nrows:
                break
            if not F.is_zero(work[pc]):
                work = vec_add_scaled(F, work, row, F.neg(work[pc]))
        if not all(F.is_zero(a) for a in work[: self.nrows]):
            return None
        return [F.neg(a) for a in work[self.nrows:]]
