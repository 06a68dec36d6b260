"""Builders for the shipped data corpus.

Everything written to data/ is generated from this module (see
scripts/make_data.py), so file content and in-memory fixtures cannot drift
apart.  The corpus contains:

* complexes: circle, 2-sphere, the 7-vertex torus, an 11-vertex genus-2
  surface obtained by gluing two tori along a removed triangle, the
  6-vertex projective plane, a Klein bottle from a 4x4 grid quotient, and
  a wedge of two circles;

* rings: products of spheres entered directly by their known cohomology,
  for spaces without a shipped triangulation;

* diagrams: the five staple branching diagrams (half/half intertwining,
  the 1/2,1/2 -> 1/4,3/4 reweighting, the three-strand 1/3 -> 1/2,1/3,1/6
  split, its two-event extension, and the half/half diagram re-analyzed at
  support 4) plus the three-strand 1/2,1/4,1/4 configuration whose ordered
  traces are not time- or resolver-invariant;

* the engineered non-resolvable sample path whose support jumps.

Realizations are piecewise-linear with rational breakpoints.  Distinct
routes always realize distinct paths (strand interiors are pairwise
different), so resolvers can be identified with route-weight vectors.
"""

from __future__ import annotations

from .exact import rational
from .measures import FiniteMeasure
from .rings import GradedAlgebra
from .simplicial import SimplicialComplex
from .spaces import CIRCLE, LINE
from .strands import BranchingDiagram, MeetingGroup, Strand

Q = rational
H = Q(1, 2)


# ---------------------------------------------------------------------------
# Complexes
# ---------------------------------------------------------------------------

def circle_complex() -> SimplicialComplex:
    return SimplicialComplex.create("S1", 3, [(0, 1), (1, 2), (0, 2)])


def sphere_complex() -> SimplicialComplex:
    return SimplicialComplex.create("S2", 4, [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)])


def torus_complex() -> SimplicialComplex:
    """The 7-vertex torus: faces {i, i+1, i+3} and {i, i+2, i+3} mod 7."""
    faces = [tuple(sorted((i % 7, (i + 1) % 7, (i + 3) % 7))) for i in range(7)]
    faces += [tuple(sorted((i % 7, (i + 2) % 7, (i + 3) % 7))) for i in range(7)]
    return SimplicialComplex.create("T2", 7, faces)


def genus2_complex() -> SimplicialComplex:
    """Genus-2 surface: two 7-vertex tori glued along a removed triangle.

    The second torus is relabeled by +7 except on the glued triangle
    {0, 1, 3}; Euler characteristic is -2 and every edge lies in exactly
    two faces.
    """
    base = [tuple(sorted((i % 7, (i + 1) % 7, (i + 3) % 7))) for i in range(7)]
    base += [tuple(sorted((i % 7, (i + 2) % 7, (i + 3) % 7))) for i in range(7)]
    glue = (0, 1, 3)
    first = [f for f in base if f != glue]

    def relabel(v: int) -> int:
        if v in glue:
            return v
        shift = {2: 7, 4: 8, 5: 9, 6: 10}
        return shift[v]

    second = [tuple(sorted(relabel(v) for v in f)) for f in base if f != glue]
    return SimplicialComplex.create("genus2", 11, first + second)


def rp2_complex() -> SimplicialComplex:
    """The 6-vertex projective plane (antipodal icosahedron quotient)."""
    faces = [
        (0, 1, 4), (0, 1, 5), (0, 2, 3), (0, 2, 5), (0, 3, 4),
        (1, 2, 3), (1, 2, 4), (1, 3, 5), (2, 4, 5), (3, 4, 5),
    ]
    return SimplicialComplex.create("RP2", 6, faces)


def klein_complex() -> SimplicialComplex:
    """Klein bottle from a 4x4 grid with a flipped vertical identification."""
    n = 4

    def vertex(i: int, j: int) -> int:
        if j == n:
            i, j = (n - i) % n, 0
        return (i % n) + n * (j % n)

    faces = []
    for i in range(n):
        for j in range(n):
            a = vertex(i, j)
            b = vertex(i + 1, j)
            c = vertex(i, j + 1)
            d = vertex(i + 1, j + 1)
            faces.append(tuple(sorted((a, b, d))))
            faces.append(tuple(sorted((a, d, c))))
    return SimplicialComplex.create("N2", n * n, faces)


def wedge_two_circles_complex() -> SimplicialComplex:
    return SimplicialComplex.create(
        "wedge2S1", 5, [(0, 1), (1, 2), (0, 2), (0, 3), (3, 4), (0, 4)]
    )


def all_complexes() -> list[SimplicialComplex]:
    return [
        circle_complex(),
        sphere_complex(),
        torus_complex(),
        genus2_complex(),
        rp2_complex(),
        klein_complex(),
        wedge_two_circles_complex(),
    ]


# ---------------------------------------------------------------------------
# Rings entered directly (spaces with known cohomology, no triangulation)
# ---------------------------------------------------------------------------

def sphere_ring(name: str, degree: int, field) -> GradedAlgebra:
    dims = [0] * (degree + 1)
    dims[0] = 1
    dims[degree] = 1
    labels = [("1",) if d == 0 else (() if dims[d] == 0 else (f"x{degree}",))
              for d in range(degree + 1)]
    return GradedAlgebra(
        name=name, field=field, dims=tuple(dims),
        labels=tuple(labels), products=(),
    )


def product_of_spheres_ring(name: str, k1: int, k2: int, field) -> GradedAlgebra:
    """H* of a product of two spheres: generators u (deg k1), v (deg k2)."""
    top = k1 + k2
    dims = [0] * (top + 1)
    labels: list[tuple] = [()] * (top + 1)
    dims[0] = 1
    labels[0] = ("1",)
    for deg, lab in ((k1, "u"), (k2, "v")):
        dims[deg] += 1
        labels[deg] = labels[deg] + (lab,)
    dims[top] += 1
    labels[top] = labels[top] + ("uv",)
    one = field.one
    iu = labels[k1].index("u")
    iv = labels[k2].index("v")
    itop = labels[top].index("uv")

    def unit_vec(deg, idx):
        out = [field.zero] * dims[deg]
        out[idx] = one
        return tuple(out)

    products = {
        (k1, iu, k2, iv): unit_vec(top, itop),
        (k2, iv, k1, iu): tuple(
            field.mul(field.of((-1) ** (k1 * k2)), c) for c in unit_vec(top, itop)
        ),
    }
    return GradedAlgebra(
        name=name, field=field, dims=tuple(dims),
        labels=tuple(labels), products=tuple(sorted(products.items())),
    )


def cp2_ring(field) -> GradedAlgebra:
    """H*(CP^2): one generator u in degree 2 with u^2 spanning degree 4."""
    products = {(2, 0, 2, 0): (field.one,)}
    return GradedAlgebra(
        name="CP2", field=field, dims=(1, 0, 1, 0, 1),
        labels=(("1",), (), ("u",), (), ("u2",)),
        products=tuple(sorted(products.items())),
    )


# ---------------------------------------------------------------------------
# Branching diagrams
# ---------------------------------------------------------------------------

def _pt(x):
    return LINE.point(x)


def _line_strand(sid, weight, *samples) -> Strand:
    return Strand(sid, weight, tuple((Q(*t) if isinstance(t, tuple) else Q(t), _pt(x))
                                     for t, x in samples))


def half_half_diagram(name: str = "example1") -> BranchingDiagram:
    """Two half-weight strands meeting once; unit-speed line realization."""
    a = _line_strand("A", H, (0, 0), ((3, 8), Q(3, 8)), ((1, 2), Q(1, 4)))
    b = _line_strand("B", H, (0, 0), ((1, 8), Q(-1, 8)), ((1, 2), Q(1, 4)))
    a2 = _line_strand("A2", H, ((1, 2), Q(1, 4)), ((7, 8), Q(5, 8)), (1, Q(1, 2)))
    b2 = _line_strand("B2", H, ((1, 2), Q(1, 4)), ((5, 8), Q(1, 8)), (1, Q(1, 2)))
    return BranchingDiagram(
        name=name,
        space=LINE,
        event_times=(Q(0), H, Q(1)),
        intervals=((a, b), (a2, b2)),
        events=((MeetingGroup.of(["A", "B"], ["A2", "B2"]),),),
        notes="half/half intertwining at t=1/2; all strand segments have unit speed",
    )


def reweight_diagram() -> BranchingDiagram:
    """Weights 1/2,1/2 -> 1/4,3/4 across a single full meeting."""
    a = _line_strand("A", H, (0, 0), ((1, 4), -1), ((1, 2), 0))
    c = _line_strand("C", H, (0, 0), ((1, 4), 1), ((1, 2), 0))
    a2 = _line_strand("A2", Q(1, 4), ((1, 2), 0), ((3, 4), -1), (1, 0))
    c2 = _line_strand("C2", Q(3, 4), ((1, 2), 0), ((3, 4), 1), (1, 0))
    return BranchingDiagram(
        name="example2",
        space=LINE,
        event_times=(Q(0), H, Q(1)),
        intervals=((a, c), (a2, c2)),
        events=((MeetingGroup.of(["A", "C"], ["A2", "C2"]),),),
        notes="no two-route resolver exists; three routes are necessary",
    )


def three_way_diagram() -> BranchingDiagram:
    """Weights 1/3,1/3,1/3 -> 1/2,1/3,1/6 across a single full meeting."""
    heights1 = {"a1": -1, "a2": 0, "a3": 1}
    heights2 = {"b1": -1, "b2": 0, "b3": 1}
    iv1 = tuple(
        _line_strand(sid, Q(1, 3), (0, 0), ((1, 4), h), ((1, 2), 0))
        for sid, h in heights1.items()
    )
    weights = {"b1": Q(1, 2), "b2": Q(1, 3), "b3": Q(1, 6)}
    iv2 = tuple(
        _line_strand(sid, weights[sid], ((1, 2), 0), ((3, 4), h), (1, 0))
        for sid, h in heights2.items()
    )
    return BranchingDiagram(
        name="example3",
        space=LINE,
        event_times=(Q(0), H, Q(1)),
        intervals=(iv1, iv2),
        events=((MeetingGroup.of(["a1", "a2", "a3"], ["b1", "b2", "b3"]),),),
        notes="no three-route resolver exists; four routes are necessary",
    )


def two_event_diagram() -> BranchingDiagram:
    """1/3 x3 -> 1/2,1/3,1/6 -> 2/3,1/3 with two full meetings."""
    third, two_thirds = Q(1, 3), Q(2, 3)
    iv1 = tuple(
        _line_strand(sid, third, (0, 0), ((1, 6), h), ((1, 3), 0))
        for sid, h in (("a1", -1), ("a2", 0), ("a3", 1))
    )
    w2 = {"b1": Q(1, 2), "b2": Q(1, 3), "b3": Q(1, 6)}
    iv2 = tuple(
        _line_strand(sid, w2[sid], ((1, 3), 0), ((1, 2), h), ((2, 3), 0))
        for sid, h in (("b1", -1), ("b2", 0), ("b3", 1))
    )
    w3 = {"c1": Q(2, 3), "c2": Q(1, 3)}
    iv3 = tuple(
        _line_strand(sid, w3[sid], ((2, 3), 0), ((5, 6), h), (1, 0))
        for sid, h in (("c1", -1), ("c2", 1))
    )
    return BranchingDiagram(
        name="example4",
        space=LINE,
        event_times=(Q(0), third, two_thirds, Q(1)),
        intervals=(iv1, iv2, iv3),
        events=(
            (MeetingGroup.of(["a1", "a2", "a3"], ["b1", "b2", "b3"]),),
            (MeetingGroup.of(["b1", "b2", "b3"], ["c1", "c2"]),),
        ),
        notes="adding a second branching event multiplies the resolver count",
    )


def half_half_support4_diagram() -> BranchingDiagram:
    """The half/half diagram again, shipped for the support-4 analysis."""
    d = half_half_diagram(name="example5")
    return BranchingDiagram(
        name=d.name,
        space=d.space,
        event_times=d.event_times,
        intervals=d.intervals,
        events=d.events,
        notes="same diagram as example1; at support 4 the two vertex resolvers "
              "span a segment of interior resolvers such as the equal mix",
    )


def ordered_trace_counterexample_diagram() -> BranchingDiagram:
    """Three strands 1/2,1/4,1/4 on the circle, after two crossing strands.

    In the first interval both strands run counterclockwise from angle 0 to
    angle 1/2 (in turns), one winding 3/2 turns and one 1/2 turn, so their
    positions swap between times t and 3t mod 1 (e.g. 1/8 and 3/8): the
    collapsed measure is the same at the two times while the per-route
    weighted triples differ.
    """
    def arc(sid, weight, t0, turns0, t1, turns1):
        return Strand(sid, weight, (
            (Q(*t0) if isinstance(t0, tuple) else Q(t0), CIRCLE.lifted(turns0)),
            (Q(*t1) if isinstance(t1, tuple) else Q(t1), CIRCLE.lifted(turns1)),
        ))

    a = arc("A", H, 0, 0, (1, 2), Q(3, 2))
    c = arc("C", H, 0, 0, (1, 2), H)
    a2 = arc("A2", H, (1, 2), H, 1, 1)
    b2 = arc("B2", Q(1, 4), (1, 2), H, 1, 0)
    c2 = arc("C2", Q(1, 4), (1, 2), H, 1, 2)
    return BranchingDiagram(
        name="counterexample71",
        space=CIRCLE,
        event_times=(Q(0), H, Q(1)),
        intervals=((a, c), (a2, b2, c2)),
        events=((MeetingGroup.of(["A", "C"], ["A2", "B2", "C2"]),),),
        notes="support-3 ordered traces are neither time- nor resolver-invariant",
    )


def all_diagrams() -> list[BranchingDiagram]:
    return [
        half_half_diagram(),
        reweight_diagram(),
        three_way_diagram(),
        two_event_diagram(),
        half_half_support4_diagram(),
        ordered_trace_counterexample_diagram(),
    ]


# ---------------------------------------------------------------------------
# The engineered non-resolvable sample path
# ---------------------------------------------------------------------------

def non_resolvable_sample_path(dt) -> list:
    """Raw measure samples whose weights jump 1/2,1/2 -> 1/4,3/4 at t=1/2.

    The mass-3/4 atom appears at a fresh location, so no decomposition into
    two fixed-weight continuous routes exists and the support path jumps by
    2/5 at the switch, which no sampling rate can shrink.
    """
    dt = rational(dt.numerator, dt.denominator) if hasattr(dt, "numerator") else rational(dt)
    steps = int(1 / dt)
    samples = []
    for k in range(steps + 1):
        t = dt * k
        if t < H:
            mu = FiniteMeasure.from_pairs(LINE, [(_pt(0), H), (_pt(1), H)])
        else:
            mu = FiniteMeasure.from_pairs(
                LINE, [(_pt(0), Q(1, 4)), (_pt(Q(3, 5)), Q(3, 4))]
            )
        samples.append((t, mu))
    return samples
