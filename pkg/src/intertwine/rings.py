"""Graded-commutative algebras, tensor powers, and cup-length searches.

A GradedAlgebra is a finite-dimensional graded algebra over a FieldSpec,
given by per-degree dimensions, basis labels, and structure constants for
products of positive-degree basis elements (the degree-0 line is spanned by
the unit).  Homogeneous elements are (degree, coefficient-tuple) pairs.

Two combinatorial quantities drive every bound downstream:

* cup_length: the largest k such that some product of k positive-degree
  elements is nonzero.  By bilinearity it suffices to search products of
  basis elements; the search is depth-first in label order with degree
  pruning and memoization on normalized partial products, so the reported
  witness is deterministic.

* zero_divisor_cup_length(A, m): the cup length of the kernel of the
  m-fold multiplication map A^(tensor m) -> A.  The kernel is computed
  degree by degree in exact arithmetic; the search runs over a kernel
  basis, seeded with the standard zero-divisors x(x)1..1 - 1..1(x)x which
  witness the classical bounds quickly.

Both searches take limits (maximum product length, node budget); exceeding
a limit yields a result flagged truncated, never a silent answer.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import product as iproduct

from .exact import format_rational, parse_rational
from .fields import FieldSpec, kernel_basis, parse_field


class RingError(ValueError):
    pass


@dataclass(frozen=True)
class GradedAlgebra:
    name: str
    field: FieldSpec
    dims: tuple  # dims[d] = dimension in degree d; dims[0] == 1 (the unit line)
    labels: tuple  # labels[d] = tuple of basis labels
    products: tuple  # sorted ((d1,i1,d2,i2), coeffs-in-degree-d1+d2) pairs

    def __post_init__(self):
        if not self.dims or self.dims[0] != 1:
            raise RingError("degree-0 component must be one-dimensional (the unit)")
        if tuple(len(l) for l in self.labels) != tuple(self.dims):
            raise RingError("labels do not match dims")

    @cached_property
    def _pmap(self) -> dict:
        return dict(self.products)

    @property
    def top_degree(self) -> int:
        return len(self.dims) - 1

    # -- elements ----------------------------------------------------------
    def zero(self, degree: int):
        n = self.dims[degree] if degree <= self.top_degree else 0
        return (degree, tuple([self.field.zero] * n))

    def unit(self):
        return (0, (self.field.one,))

    def basis_element(self, degree: int, index: int):
        coeffs = [self.field.zero] * self.dims[degree]
        coeffs[index] = self.field.one
        return (degree, tuple(coeffs))

    def element(self, degree: int, coeffs):
        coeffs = tuple(coeffs)
        if len(coeffs) != (self.dims[degree] if degree <= self.top_degree else 0):
            raise RingError("coefficient vector has the wrong length")
        return (degree, coeffs)

    def is_zero(self, el) -> bool:
        return all(self.field.is_zero(c) for c in el[1])

    def mul(self, x, y):
        F = self.field
        dx, cx = x
        dy, cy = y
        d = dx + dy
        if d > self.top_degree:
            return self.zero(d)
        if dx == 0:
            return (dy, tuple(F.mul(cx[0], c) for c in cy))
        if dy == 0:
            return (dx, tuple(F.mul(cy[0], c) for c in cx))
        acc = [F.zero] * self.dims[d]
        for i, a in enumerate(cx):
            if F.is_zero(a):
                continue
            for j, b in enumerate(cy):
                if F.is_zero(b):
                    continue
                coeffs = self._pmap.get((dx, i, dy, j))
                if coeffs is None:
                    continue
                ab = F.mul(a, b)
                for k, c in enumerate(coeffs):
                    if not F.is_zero(c):
                        acc[k] = F.add(acc[k], F.mul(ab, c))
        return (d, tuple(acc))

    def describe_element(self, el) -> str:
        d, coeffs = el
        terms = [
            f"{format_rational(c) if self.field.p == 0 else c}*{self.labels[d][i]}"
            for i, c in enumerate(coeffs)
            if not self.field.is_zero(c)
        ]
        return " + ".join(terms) if terms else "0"

    def positive_basis(self) -> list:
        """(label, element) for every basis element of positive degree."""
        out = []
        for d in range(1, self.top_degree + 1):
            for i in range(self.dims[d]):
                out.append((self.labels[d][i], self.basis_element(d, i)))
        return out

    # -- structural checks (exact; used by the test suite) ------------------
    def check_unit(self) -> bool:
        one = self.unit()
        for _, b in self.positive_basis():
            if self.mul(one, b) != b or self.mul(b, one) != b:
                return False
        return True

    def check_graded_commutativity(self) -> bool:
        F = self.field
        basis = self.positive_basis()
        for _, x in basis:
            for _, y in basis:
                xy = self.mul(x, y)
                yx = self.mul(y, x)
                sign = (-1) ** (x[0] * y[0])
                flipped = (yx[0], tuple(F.mul(F.of(sign), c) for c in yx[1]))
                if xy != flipped:
                    return False
        return True

    def check_associativity(self) -> bool:
        basis = self.positive_basis()
        for _, x in basis:
            for _, y in basis:
                if x[0] + y[0] > self.top_degree:
                    continue
                for _, z in basis:
                    if self.mul(self.mul(x, y), z) != self.mul(x, self.mul(y, z)):
                        return False
        return True


def has_nonzero_positive_degree(A: GradedAlgebra):
    """(True, least positive degree with a nonzero component) or (False, None)."""
    for d in range(1, A.top_degree + 1):
        if A.dims[d] > 0:
            return True, d
    return False, None


# ---------------------------------------------------------------------------
# Tensor powers with the Koszul sign rule
# ---------------------------------------------------------------------------

@lru_cache(maxsize=64)
def tensor_power(A: GradedAlgebra, m: int) -> GradedAlgebra:
    if m < 1:
        raise RingError("tensor power requires m >= 1")
    if m == 1:
        return A
    F = A.field
    top = A.top_degree * m
    a_degs = list(range(A.top_degree + 1))

    basis: list[list[tuple]] = [[] for _ in range(top + 1)]
    for combo in iproduct(*[a_degs] * m):
        d = sum(combo)
        for idxs in iproduct(*[range(A.dims[k]) for k in combo]):
            basis[d].append(tuple(zip(combo, idxs)))
    for d in range(top + 1):
        basis[d].sort()
    index = [{b: i for i, b in enumerate(bd)} for bd in basis]
    dims = tuple(len(bd) for bd in basis)
    labels = tuple(
        tuple("|".join(A.labels[k][i] for k, i in b) for b in bd) for bd in basis
    )

    def expand(factors, scalar, out, degree):
        """Distribute a pure tensor of A-elements over the tensor basis."""
        slots = [[(i, c) for i, c in enumerate(vec) if not F.is_zero(c)] for _, vec in factors]
        degs = [d for d, _ in factors]
        for choice in iproduct(*slots):
            coeff = scalar
            key = []
            for (k, (i, c)) in zip(degs, choice):
                coeff = F.mul(coeff, c)
                key.append((k, i))
            pos = index[degree][tuple(key)]
            out[pos] = F.add(out[pos], coeff)

    products = {}
    for d1 in range(1, top + 1):
        for d2 in range(1, top - d1 + 1):
            for i, u in enumerate(basis[d1]):
                for j, v in enumerate(basis[d2]):
                    sign = 0
                    for k in range(m):
                        for l in range(k + 1, m):
                            sign += v[k][0] * u[l][0]
                    comps = []
                    dead = False
                    for (du, iu), (dv, iv) in zip(u, v):
                        w = A.mul(A.basis_element(du, iu), A.basis_element(dv, iv))
                        if A.is_zero(w):
                            dead = True
                            break
                        comps.append(w)
                    if dead:
                        continue
                    out = [F.zero] * dims[d1 + d2]
                    expand(comps, F.of((-1) ** sign), out, d1 + d2)
                    if any(not F.is_zero(c) for c in out):
                        products[(d1, i, d2, j)] = tuple(out)

    return GradedAlgebra(
        name=f"({A.name})^(x{m})",
        field=F,
        dims=dims,
        labels=labels,
        products=tuple(sorted(products.items())),
    )


def pure_tensor(T: GradedAlgebra, A: GradedAlgebra, slots) -> tuple:
    """Element of T = A^(x m) that is the pure tensor with the given slots.

    slots is a sequence of (degree, index) pairs, one per factor; degree 0
    entries are the unit.
    """
    degree = sum(d for d, _ in slots)
    coeffs = [T.field.zero] * T.dims[degree]
    label = "|".join(A.labels[d][i] for d, i in slots)
    coeffs[T.labels[degree].index(label)] = T.field.one
    return (degree, tuple(coeffs))


# ---------------------------------------------------------------------------
# The multiplication-map kernel (m-th zero-divisors)
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class IdealBasis:
    """Per-degree basis of the kernel of the m-fold multiplication map."""

    algebra: GradedAlgebra  # the tensor power the ideal lives in
    source: GradedAlgebra
    m: int
    vectors: tuple  # tuple over degrees of tuples of coefficient tuples

    def elements(self) -> list:
        out = []
        for d, vecs in enumerate(self.vectors):
            for v in vecs:
                out.append((d, v))
        return out

    def dimension(self, degree: int) -> int:
        return len(self.vectors[degree]) if degree < len(self.vectors) else 0


def diagonal_kernel(A: GradedAlgebra, m: int) -> IdealBasis:
    """Kernel of the multiplication map A^(x m) -> A, degree by degree."""
    if m < 2:
        raise RingError("zero-divisors need m >= 2")
    F = A.field
    T = tensor_power(A, m)
    per_degree = []
    for d in range(T.top_degree + 1):
        n = T.dims[d]
        if n == 0 or d == 0:
            per_degree.append(())
            continue
        target_dim = A.dims[d] if d <= A.top_degree else 0
        if target_dim == 0:
            identity = [
                tuple(F.one if j == i else F.zero for j in range(n)) for i in range(n)
            ]
            per_degree.append(tuple(identity))
            continue
        cols = []
        for b in _tensor_basis_slots(T, A, d):
            el = A.unit()
            for du, iu in b:
                el = A.mul(el, A.basis_element(du, iu))
            cols.append(el[1])
        rows = [[cols[j][i] for j in range(n)] for i in range(target_dim)]
        per_degree.append(tuple(tuple(v) for v in kernel_basis(F, rows, n)))
    return IdealBasis(algebra=T, source=A, m=m, vectors=tuple(per_degree))


def _tensor_basis_slots(T: GradedAlgebra, A: GradedAlgebra, degree: int):
    """Recover the slot decomposition of T's degree-d basis from labels."""
    out = []
    for lab in T.labels[degree]:
        slots = []
        for part in lab.split("|"):
            found = None
            for d in range(A.top_degree + 1):
                if part in A.labels[d]:
                    found = (d, A.labels[d].index(part))
                    break
            if found is None:
                raise RingError(f"label {part!r} is not a basis label of {A.name}")
            slots.append(found)
        out.append(tuple(slots))
    return out


# ---------------------------------------------------------------------------
# Product-length searches
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SearchLimits:
    max_len: int = 8
    node_budget: int = 10**6


@dataclass(frozen=True)
class SearchResult:
    value: int
    truncated: bool
    witness: tuple  # labels of a longest nonzero product found

    def __int__(self):
        return self.value


class _Budget(Exception):
    pass


def _longest_product(A: GradedAlgebra, generators, limits: SearchLimits) -> SearchResult:
    """Longest nonzero product of elements drawn (with repetition) from generators."""
    F = A.field
    top = A.top_degree
    gens = [(lab, el) for lab, el in generators if not A.is_zero(el)]
    if not gens:
        return SearchResult(0, False, ())
    min_deg = min(el[0] for _, el in gens)
    memo: dict = {}
    state = {"nodes": 0, "best": 0, "best_witness": (), "depth_cut": False}

    def norm(el):
        d, vec = el
        first = next(c for c in vec if not F.is_zero(c))
        inv = F.inv(first)
        return (d, tuple(F.mul(inv, c) for c in vec))

    def extend(el, depth_left: int):
        d = el[0]
        degree_room = (top - d) // min_deg
        eff = min(depth_left, degree_room)
        if eff <= 0:
            if depth_left <= 0 < degree_room:
                state["depth_cut"] = True
            return 0, ()
        key = (norm(el), eff)
        hit = memo.get(key)
        if hit is not None:
            return hit
        best, ext = 0, ()
        for lab, g in gens:
            if d + g[0] > top:
                continue
            state["nodes"] += 1
            if state["nodes"] > limits.node_budget:
                raise _Budget()
            prod = A.mul(el, g)
            if A.is_zero(prod):
                continue
            sub, subext = extend(prod, eff - 1)
            if 1 + sub > best:
                best, ext = 1 + sub, (lab,) + subext
        memo[key] = (best, ext)
        return best, ext

    truncated = False
    try:
        for lab, g in gens:
            length, ext = extend(g, limits.max_len - 1)
            if 1 + length > state["best"]:
                state["best"] = 1 + length
                state["best_witness"] = (lab,) + ext
    except _Budget:
        truncated = True
    if state["depth_cut"] and state["best"] >= limits.max_len:
        truncated = True
    return SearchResult(state["best"], truncated, state["best_witness"])


def cup_length(A: GradedAlgebra, limits: SearchLimits = SearchLimits()) -> SearchResult:
    """Largest k with a nonzero product of k positive-degree elements."""
    return _longest_product(A, A.positive_basis(), limits)


def standard_zero_divisors(A: GradedAlgebra, m: int):
    """x(x)1..1 - 1..(x)..1 style kernel elements, the quick witnesses."""
    T = tensor_power(A, m)
    out = []
    for d in range(1, A.top_degree + 1):
        for i in range(A.dims[d]):
            for slot in range(m - 1):
                lead = [(0, 0)] * m
                lead[slot] = (d, i)
                tail = [(0, 0)] * m
                tail[m - 1] = (d, i)
                el_lead = pure_tensor(T, A, lead)
                el_tail = pure_tensor(T, A, tail)
                coeffs = tuple(
                    A.field.sub(a, b) for a, b in zip(el_lead[1], el_tail[1])
                )
                label = f"[{A.labels[d][i]}@{slot + 1}-{A.labels[d][i]}@{m}]"
                out.append((label, (d, coeffs)))
    return T, out


def zero_divisor_cup_length(A: GradedAlgebra, m: int,
                            limits: SearchLimits = SearchLimits()) -> SearchResult:
    """Cup length of the kernel ideal of the m-fold multiplication map."""
    if m < 2:
        raise RingError("zero-divisor cup length needs m >= 2")
    kern = diagonal_kernel(A, m)
    T, preferred = standard_zero_divisors(A, m)
    gens = list(preferred)
    seen = {(el[0], _normalize(T, el[1])) for _, el in gens}
    for d, vec in kern.elements():
        key = (d, _normalize(T, vec))
        if key in seen:
            continue
        seen.add(key)
        gens.append((f"k{d}.{len(gens)}", (d, vec)))
    return _longest_product(T, gens, limits)


def _normalize(T: GradedAlgebra, vec):
    F = T.field
    first = next((c for c in vec if not F.is_zero(c)), None)
    if first is None:
        return tuple(vec)
    inv = F.inv(first)
    return tuple(F.mul(inv, c) for c in vec)


# ---------------------------------------------------------------------------
# Ring file format
# ---------------------------------------------------------------------------

def load_ring(path) -> GradedAlgebra:
    with open(path) as fh:
        doc = json.load(fh)
    F = parse_field(doc.get("field", "Q"))
    dims = tuple(int(d) for d in doc["dims"])
    labels = tuple(tuple(l) for l in doc["labels"])
    products = {}
    for entry in doc.get("products", []):
        (d1, i1, d2, i2), coeffs = entry
        parsed = tuple(
            F.of(int(c)) if F.p else parse_rational(c) for c in coeffs
        )
        products[(int(d1), int(i1), int(d2), int(i2))] = parsed
    return GradedAlgebra(
        name=doc.get("name", str(path)),
        field=F,
        dims=dims,
        labels=labels,
        products=tuple(sorted(products.items())),
    )


def save_ring(A: GradedAlgebra, path) -> None:
    products = []
    for (d1, i1, d2, i2), coeffs in A.products:
        if A.field.p:
            rendered = [int(c) for c in coeffs]
        else:
            rendered = [format_rational(c) for c in coeffs]
        products.append([[d1, i1, d2, i2], rendered])
    doc = {
        "name": A.name,
        "field": "Q" if A.field.p == 0 else str(A.field.p),
        "dims": list(A.dims),
        "labels": [list(l) for l in A.labels],
        "products": products,
    }
    with open(path, "w") as fh:
        json.dump(doc, fh, indent=1, sort_keys=True)
        fh.write("\n")
