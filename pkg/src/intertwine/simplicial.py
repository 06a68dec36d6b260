"""Finite simplicial complexes and their cohomology rings.

A complex is given by its maximal simplices on vertices 0..V-1.  Cochains
live over a FieldSpec; coboundaries use the orientation in which every
simplex is written with increasing vertex indices.  Cohomology bases are
chosen deterministically: cocycle kernels in echelon order, reduced modulo
coboundaries, re-echelonized.  Cup products are evaluated on representative
cocycles with the Alexander-Whitney front-face/back-face rule

    (f.g)([v0..v_{p+q}]) = f([v0..v_p]) * g([v_p..v_{p+q}])

and then projected back to the chosen basis modulo coboundaries.  The
result is packaged as a GradedAlgebra, the common currency of the ring
operations.

Only connected complexes are accepted: every bound consumed downstream
assumes path-connectedness, so disconnected input is an error here rather
than a warning.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations

from .fields import FieldSpec, LinearSolver, kernel_basis, rref, vec_add_scaled, zero_vector
from .rings import GradedAlgebra


class ComplexError(ValueError):
    pass


@dataclass(frozen=True)
class SimplicialComplex:
    name: str
    vertex_count: int
    maximal_simplices: tuple  # tuple of sorted vertex tuples

    @staticmethod
    def create(name: str, vertex_count: int, maximal_simplices) -> "SimplicialComplex":
        maxs = sorted({tuple(sorted(set(s))) for s in maximal_simplices})
        K = SimplicialComplex(name, vertex_count, tuple(maxs))
        problems = K.invariant_failures()
        if problems:
            raise ComplexError(f"invalid complex {name!r}: " + "; ".join(problems))
        return K

    def invariant_failures(self) -> list[str]:
        problems = []
        if self.vertex_count <= 0 or not self.maximal_simplices:
            problems.append("empty complex")
            return problems
        covered = set()
        for s in self.maximal_simplices:
            if not s:
                problems.append("empty maximal simplex")
            if any(v < 0 or v >= self.vertex_count for v in s):
                problems.append(f"vertex index out of range in {s}")
            covered.update(s)
        if covered != set(range(self.vertex_count)):
            missing = sorted(set(range(self.vertex_count)) - covered)
            problems.append(f"vertices {missing} lie in no maximal simplex")
        for a in self.maximal_simplices:
            for b in self.maximal_simplices:
                if a != b and set(a) <= set(b):
                    problems.append(f"maximal simplex {a} is contained in {b}")
        if problems:
            return problems
        # connectivity through shared simplices (1-skeleton suffices)
        parent = list(range(self.vertex_count))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for s in self.maximal_simplices:
            for v in s[1:]:
                parent[find(v)] = find(s[0])
        roots = {find(v) for v in range(self.vertex_count)}
        if len(roots) > 1:
            problems.append(f"complex is disconnected ({len(roots)} components)")
        return problems

    def simplices(self) -> list[list[tuple]]:
        """All simplices grouped by dimension, lexicographically sorted."""
        by_dim: dict[int, set] = {}
        for s in self.maximal_simplices:
            for k in range(1, len(s) + 1):
                by_dim.setdefault(k - 1, set()).update(combinations(s, k))
        top = max(by_dim)
        return [sorted(by_dim.get(d, ())) for d in range(top + 1)]

    def euler_characteristic(self) -> int:
        return sum((-1) ** d * len(sd) for d, sd in enumerate(self.simplices()))


@dataclass(frozen=True)
class CochainComplex:
    complex: SimplicialComplex
    field: FieldSpec
    simplices: tuple  # per-dimension tuples of simplices
    coboundaries: tuple  # coboundaries[d] : C^d -> C^{d+1} as a row-per-target matrix

    def dims(self) -> tuple[int, ...]:
        return tuple(len(s) for s in self.simplices)


def cochain_complex(K: SimplicialComplex, F: FieldSpec) -> CochainComplex:
    problems = K.invariant_failures()
    if problems:
        raise ComplexError(f"invalid complex {K.name!r}: " + "; ".join(problems))
    simps = K.simplices()
    index = [{s: i for i, s in enumerate(sd)} for sd in simps]
    mats = []
    for d in range(len(simps) - 1):
        rows = []
        for tau in simps[d + 1]:
            row = zero_vector(F, len(simps[d]))
            for i in range(len(tau)):
                face = tau[:i] + tau[i + 1:]
                row[index[d][face]] = F.of((-1) ** i)
            rows.append(row)
        mats.append(rows)
    return CochainComplex(K, F, tuple(tuple(s) for s in simps), tuple(mats))


def betti_numbers(cc: CochainComplex) -> tuple[int, ...]:
    F = cc.field
    out = []
    for d in range(len(cc.simplices)):
        n = len(cc.simplices[d])
        delta = cc.coboundaries[d] if d < len(cc.coboundaries) else []
        z = n - len(rref(F, delta)[0]) if delta else n
        b = len(rref(F, cc.coboundaries[d - 1])[0]) if d > 0 and cc.coboundaries[d - 1] else 0
        out.append(z - b)
    return tuple(out)


def _cohomology_representatives(cc: CochainComplex, d: int) -> list[list]:
    """Echelonized cocycle representatives of H^d, reduced mod coboundaries."""
    F = cc.field
    n = len(cc.simplices[d])
    delta = cc.coboundaries[d] if d < len(cc.coboundaries) else []
    cocycles = kernel_basis(F, delta, n) if delta else [
        [F.one if j == i else F.zero for j in range(n)] for i in range(n)
    ]
    if d == 0:
        image_red, image_piv = [], []
    else:
        prev = cc.coboundaries[d - 1]
        image_rows = [[prev[i][j] for i in range(len(prev))] for j in range(len(prev[0]))]
        # rows of image_rows are the coboundary images (columns of the matrix)
        image_red, image_piv = rref(F, image_rows)
    reduced = []
    for v in cocycles:
        w = list(v)
        for row, pc in zip(image_red, image_piv):
            if not F.is_zero(w[pc]):
                w = vec_add_scaled(F, w, row, F.neg(w[pc]))
        if any(not F.is_zero(a) for a in w):
            reduced.append(w)
    reps, _ = rref(F, reduced) if reduced else ([], [])
    return reps


def _cup_on_cochains(cc: CochainComplex, p: int, fvec: list, q: int, gvec: list) -> list:
    F = cc.field
    d = p + q
    if d >= len(cc.simplices):
        return []
    fin = {s: c for s, c in zip(cc.simplices[p], fvec)}
    gin = {s: c for s, c in zip(cc.simplices[q], gvec)}
    out = []
    for sigma in cc.simplices[d]:
        front = sigma[: p + 1]
        back = sigma[p:]
        out.append(F.mul(fin[front], gin[back]))
    return out


def cohomology_ring(K: SimplicialComplex, F: FieldSpec) -> GradedAlgebra:
    cc = cochain_complex(K, F)
    reps = [_cohomology_representatives(cc, d) for d in range(len(cc.simplices))]
    top = max((d for d, r in enumerate(reps) if r), default=0)
    dims = tuple(len(reps[d]) for d in range(top + 1))
    if dims[0] != 1:
        raise ComplexError("degree-0 cohomology is not one-dimensional")

    # per-degree solver: columns are H-basis representatives then coboundaries
    solvers = {}
    for d in range(1, top + 1):
        cols = [list(v) for v in reps[d]]
        if d - 1 < len(cc.coboundaries) and cc.coboundaries[d - 1]:
            prev = cc.coboundaries[d - 1]
            for j in range(len(prev[0])):
                cols.append([prev[i][j] for i in range(len(prev))])
        solvers[d] = LinearSolver(F, cols)

    products = {}
    for d1 in range(1, top + 1):
        for d2 in range(1, top - d1 + 1):
            for i, f in enumerate(reps[d1]):
                for j, g in enumerate(reps[d2]):
                    raw = _cup_on_cochains(cc, d1, f, d2, g)
                    coeffs = solvers[d1 + d2].solve(raw)
                    if coeffs is None:
                        raise ComplexError("cup product fell outside the cocycle space")
                    cls = tuple(coeffs[: dims[d1 + d2]])
                    if any(not F.is_zero(c) for c in cls):
                        products[(d1, i, d2, j)] = cls

    labels = tuple(
        tuple(f"h{d}_{i}" for i in range(dims[d])) if d else ("1",) for d in range(top + 1)
    )
    return GradedAlgebra(
        name=f"H*({K.name}; {F.label})",
        field=F,
        dims=dims,
        labels=labels,
        products=_freeze_products(products),
    )


def _freeze_products(products: dict) -> tuple:
    return tuple(sorted(products.items()))


# ---------------------------------------------------------------------------
# Complex file format: {"name", "vertex_count", "maximal_simplices": [[..]]}
# ---------------------------------------------------------------------------

def load_complex(path) -> SimplicialComplex:
    with open(path) as fh:
        doc = json.load(fh)
    try:
        return SimplicialComplex.create(
            doc["name"], int(doc["vertex_count"]), doc["maximal_simplices"]
        )
    except KeyError as exc:
        raise ComplexError(f"complex file {path} is missing field {exc}") from exc


def save_complex(K: SimplicialComplex, path) -> None:
    doc = {
        "name": K.name,
        "vertex_count": K.vertex_count,
        "maximal_simplices": [list(s) for s in K.maximal_simplices],
    }
    with open(path, "w") as fh:
        json.dump(doc, fh, indent=1, sort_keys=True)
        fh.write("\n")
