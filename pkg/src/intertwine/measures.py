"""Finitely supported probability measures and the two metrics on them.

A FiniteMeasure is a canonicalized list of (point, weight) atoms with exact
rational weights summing to 1.  Measures with support of size at most n are
the points of the space of n-supported distributions; finite point sets with
the Hausdorff metric model their supports.

The Levy-Prokhorov distance between two finitely supported measures is

    inf { eps > 0 : mu(A) <= nu(A^eps) + eps  and  nu(A) <= mu(A^eps) + eps
                    for all A }

where A^eps is the closed eps-neighborhood.  For finitely supported measures
it suffices to let A range over subsets of the union of the supports, because
mu(A) depends only on A intersected with supp(mu) and shrinking A only helps
the right-hand side.  Feasibility of a given eps is checked exhaustively over
all subsets (bitmask enumeration); the infimum is then located by bisection.
Closed neighborhoods make feasibility monotone in eps, so bisection is sound;
the open/closed distinction moves the answer by less than the tolerance.
"""

from __future__ import annotations

from dataclasses import dataclass

from .exact import Q1, format_rational, parse_rational


class MeasureError(ValueError):
    pass


@dataclass(frozen=True)
class FiniteSet:
    """A nonempty finite subset of a metric space, canonically ordered."""

    space: object
    points: tuple

    @staticmethod
    def of(space, points) -> "FiniteSet":
        canon = {space.canon(p).key(): space.canon(p) for p in points}
        if not canon:
            raise MeasureError("empty point set")
        ordered = tuple(canon[k] for k in sorted(canon))
        return FiniteSet(space, ordered)

    def __len__(self):
        return len(self.points)


@dataclass(frozen=True)
class FiniteMeasure:
    space: object
    atoms: tuple  # ((point, weight), ...) canonical: merged, sorted, weights > 0

    @staticmethod
    def from_pairs(space, pairs) -> "FiniteMeasure":
        merged = {}
        points = {}
        for point, weight in pairs:
            w = parse_rational(weight)
            if w < 0:
                raise MeasureError("negative atom weight")
            if w == 0:
                continue
            p = space.canon(point)
            k = p.key()
            merged[k] = merged.get(k, 0) + w
            points[k] = p
        if not merged:
            raise MeasureError("measure with no atoms")
        total = sum(merged.values())
        if total != Q1:
            raise MeasureError(f"atom weights sum to {format_rational(total)}, not 1")
        atoms = tuple((points[k], merged[k]) for k in sorted(merged))
        return FiniteMeasure(space, atoms)

    def support(self) -> FiniteSet:
        return FiniteSet(self.space, tuple(p for p, _w in self.atoms))

    def support_size(self) -> int:
        return len(self.atoms)

    def mass(self, point) -> object:
        k = self.space.canon(point).key()
        for p, w in self.atoms:
            if p.key() == k:
                return w
        return 0

    def is_dirac(self) -> bool:
        return len(self.atoms) == 1

    def describe(self) -> str:
        return " + ".join(
            f"{format_rational(w)}*d[{self.space.describe_point(p)}]" for p, w in self.atoms
        )


def dirac(space, point) -> FiniteMeasure:
    return FiniteMeasure.from_pairs(space, [(point, 1)])


def support(mu: FiniteMeasure) -> FiniteSet:
    return mu.support()


def hausdorff_distance(A: FiniteSet, B: FiniteSet) -> float:
    if A.space != B.space:
        raise MeasureError("Hausdorff distance requires sets in the same space")
    d = A.space.distance
    forward = max(min(d(a, b) for b in B.points) for a in A.points)
    backward = max(min(d(a, b) for a in A.points) for b in B.points)
    return max(forward, backward)


def lp_distance(mu: FiniteMeasure, nu: FiniteMeasure, tol: float = 1e-9,
                support_cap: int = 16) -> float:
    """Levy-Prokhorov distance by bisection over subset feasibility checks."""
    if mu.space != nu.space:
        raise MeasureError("LP distance requires measures on the same space")
    dist = mu.space.distance

    keys = {}
    for p, _w in mu.atoms + nu.atoms:
        keys.setdefault(p.key(), p)
    points = [keys[k] for k in sorted(keys)]
    n = len(points)
    if n > support_cap:
        raise MeasureError(
            f"support union of size {n} exceeds cap {support_cap}; "
            "the subset feasibility check is exponential"
        )

    wa = [float(mu.mass(p)) for p in points]
    wb = [float(nu.mass(p)) for p in points]
    dmat = [[dist(p, q) for q in points] for p in points]

    size = 1 << n
    mass_a = [0.0] * size
    mass_b = [0.0] * size
    for m in range(1, size):
        low = (m & -m).bit_length() - 1
        rest = m & (m - 1)
        mass_a[m] = mass_a[rest] + wa[low]
        mass_b[m] = mass_b[rest] + wb[low]

    def feasible(eps: float) -> bool:
        nb = [0] * n
        for i in range(n):
            row = dmat[i]
            acc = 0
            for j in range(n):
                if row[j] <= eps:
                    acc |= 1 << j
            nb[i] = acc
        grow = [0] * size
        for m in range(1, size):
            low = (m & -m).bit_length() - 1
            grow[m] = grow[m & (m - 1)] | nb[low]
        for m in range(1, size):
            g = grow[m]
            if mass_a[m] > mass_b[g] + eps or mass_b[m] > mass_a[g] + eps:
                return False
        return True

    lo, hi = 0.0, 1.0  # eps = 1 is always feasible for probability measures
    while hi - lo > tol / 4.0:
        mid = (lo + hi) / 2.0
        if feasible(mid):
            hi = mid
        else:
            lo = mid
    return hi
