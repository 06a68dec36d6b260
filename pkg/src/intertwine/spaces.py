"""Shipped metric spaces and their points.

Three concrete spaces are supported as carriers for measures, strand
realizations, and navigation: euclidean space (rational coordinates),
the circle with its arc-length metric, and edge-weighted metric graphs
with the shortest-path metric.

Points carry exact rational data so that coincidence checks (meeting
events, Dirac detection, measure canonicalization) are exact; only the
distance functions return floats.  Circle points are stored as rational
turns (fraction of a full revolution); displayed angles are 2*pi*turns,
so the metric is the usual arc length in radians.  Interpolation accepts
lifted turn values outside [0, 1) so that a strand may wind through the
branch cut; the canonical point identity is turns mod 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .exact import parse_rational, format_rational, rational

TAU = 2.0 * math.pi


class SpaceError(ValueError):
    pass


@dataclass(frozen=True)
class EuclideanPoint:
    coords: tuple

    def key(self):
        return ("e",) + self.coords


@dataclass(frozen=True)
class CirclePoint:
    turns: object  # rational in [0, 1)

    @property
    def angle(self) -> float:
        return float(self.turns) * TAU

    def key(self):
        return ("c", self.turns)


@dataclass(frozen=True)
class GraphPoint:
    """A point of a metric graph: a vertex, or an interior point of an edge."""

    vertex: object = None
    edge: str | None = None
    s: object = None  # rational in (0, 1) along the edge when interior

    def key(self):
        if self.vertex is not None:
            return ("gv", self.vertex)
        return ("ge", self.edge, self.s)


@dataclass(frozen=True)
class EuclideanSpace:
    dim: int

    def point(self, *coords) -> EuclideanPoint:
        cs = tuple(parse_rational(c) for c in coords)
        if len(cs) != self.dim:
            raise SpaceError(f"expected {self.dim} coordinates, got {len(cs)}")
        return EuclideanPoint(cs)

    def distance(self, p: EuclideanPoint, q: EuclideanPoint) -> float:
        return math.sqrt(sum((float(a) - float(b)) ** 2 for a, b in zip(p.coords, q.coords)))

    def interpolate(self, p, q, s):
        """Point at parameter s (rational in [0,1]) on the segment p -> q."""
        return EuclideanPoint(tuple(a + s * (b - a) for a, b in zip(p.coords, q.coords)))

    def canon(self, p):
        return p

    def parse_point(self, literal) -> EuclideanPoint:
        if not isinstance(literal, (list, tuple)):
            literal = [literal]
        return self.point(*literal)

    def point_json(self, p):
        return [format_rational(c) for c in p.coords]

    def describe_point(self, p) -> str:
        return "(" + ", ".join(format_rational(c) for c in p.coords) + ")"


@dataclass(frozen=True)
class CircleSpace:
    def point(self, turns) -> CirclePoint:
        t = parse_rational(turns)
        return CirclePoint(t - (t.numerator // t.denominator))

    def lifted(self, turns) -> CirclePoint:
        """Point with an uncanonicalized turn value, for winding path samples."""
        return CirclePoint(parse_rational(turns))

    def from_angle(self, radians: float) -> CirclePoint:
        frac = rational(round((radians / TAU) * 10**9), 10**9)
        return self.point(frac)

    def distance(self, p: CirclePoint, q: CirclePoint) -> float:
        f = abs(float(p.turns) - float(q.turns))
        f = min(f, 1.0 - f)
        return f * TAU

    def interpolate(self, p, q, s):
        """Linear in (possibly lifted) turns; callers pass lifted samples."""
        return CirclePoint(self._canon_turns(p.turns + s * (q.turns - p.turns)))

    @staticmethod
    def _canon_turns(t):
        return t - (t.numerator // t.denominator)

    def canon(self, p):
        return CirclePoint(self._canon_turns(p.turns))

    def parse_point(self, literal) -> CirclePoint:
        return self.point(literal)

    def parse_path_point(self, literal) -> CirclePoint:
        return self.lifted(literal)

    def point_json(self, p):
        return format_rational(p.turns)

    def describe_point(self, p) -> str:
        return f"angle {format_rational(p.turns)}*2pi"


@dataclass(frozen=True)
class GraphSpace:
    """Edge-weighted undirected graph with the shortest-path metric.

    edges maps edge id -> (u, v, length).  Lengths are rationals; the
    vertex-to-vertex distance table is computed once by Floyd-Warshall.
    """

    edges: tuple  # tuple of (edge_id, u, v, length)
    _dist: dict = field(default_factory=dict, compare=False, hash=False, repr=False)

    def __post_init__(self):
        verts = set()
        for _, u, v, _w in self.edges:
            verts.add(u)
            verts.add(v)
        d = {(a, b): math.inf for a in verts for b in verts}
        for a in verts:
            d[(a, a)] = 0.0
        for _, u, v, w in self.edges:
            w = float(w)
            if w < d[(u, v)]:
                d[(u, v)] = d[(v, u)] = w
        for k in verts:
            for a in verts:
                dak = d[(a, k)]
                for b in verts:
                    alt = dak + d[(k, b)]
                    if alt < d[(a, b)]:
                        d[(a, b)] = alt
        object.__setattr__(self, "_dist", d)

    def _edge(self, eid: str):
        for e in self.edges:
            if e[0] == eid:
                return e
        raise SpaceError(f"unknown edge {eid!r}")

    def point(self, edge: str, s) -> GraphPoint:
        s = parse_rational(s)
        eid, u, v, _w = self._edge(edge)
        if s < 0 or s > 1:
            raise SpaceError("edge parameter must lie in [0, 1]")
        if s == 0:
            return GraphPoint(vertex=u)
        if s == 1:
            return GraphPoint(vertex=v)
        return GraphPoint(edge=eid, s=s)

    def vertex_point(self, v) -> GraphPoint:
        if not any(v in (u, w) for _, u, w, _l in self.edges):
            raise SpaceError(f"unknown vertex {v!r}")
        return GraphPoint(vertex=v)

    def _anchors(self, p: GraphPoint):
        """(vertex, offset) pairs giving distances from p to edge endpoints."""
        if p.vertex is not None:
            return [(p.vertex, 0.0)]
        _, u, v, w = self._edge(p.edge)
        return [(u, float(p.s) * float(w)), (v, (1.0 - float(p.s)) * float(w))]

    def distance(self, p: GraphPoint, q: GraphPoint) -> float:
        best = math.inf
        if p.edge is not None and p.edge == q.edge:
            w = float(self._edge(p.edge)[3])
            best = abs(float(p.s) - float(q.s)) * w
        for a, da in self._anchors(p):
            for b, db in self._anchors(q):
                best = min(best, da + self._dist[(a, b)] + db)
        return best

    def interpolate(self, p, q, s):
        pe = p.edge
        qe = q.edge
        if pe is not None and qe is not None and pe != qe:
            raise SpaceError("graph interpolation requires samples on a common edge")
        eid = pe or qe
        if eid is None:
            if p.vertex == q.vertex:
                return p
            eid = next((e[0] for e in self.edges if {e[1], e[2]} == {p.vertex, q.vertex}), None)
            if eid is None:
                raise SpaceError("graph interpolation requires samples on a common edge")
        sp = self._param_on(eid, p)
        sq = self._param_on(eid, q)
        return self.point(eid, sp + s * (sq - sp))

    def _param_on(self, eid, p: GraphPoint):
        _, u, v, _w = self._edge(eid)
        if p.vertex is not None:
            if p.vertex == u:
                return rational(0)
            if p.vertex == v:
                return rational(1)
            raise SpaceError("point does not lie on the requested edge")
        return p.s

    def canon(self, p):
        return p

    def parse_point(self, literal) -> GraphPoint:
        if isinstance(literal, (list, tuple)) and len(literal) == 2:
            return self.point(literal[0], literal[1])
        return self.vertex_point(literal)

    def point_json(self, p):
        if p.vertex is not None:
            return p.vertex
        return [p.edge, format_rational(p.s)]

    def describe_point(self, p) -> str:
        if p.vertex is not None:
            return f"vertex {p.vertex}"
        return f"edge {p.edge} at {format_rational(p.s)}"


CIRCLE = CircleSpace()
LINE = EuclideanSpace(1)
PLANE = EuclideanSpace(2)


def interpolate_samples(space, samples, t):
    """Exact position at time t on a piecewise-linear sample path.

    samples is a sequence of (time, point) with strictly increasing rational
    times; between samples the space's linear/geodesic interpolation is used.
    """
    if t <= samples[0][0]:
        return samples[0][1]
    for (t0, p0), (t1, p1) in zip(samples, samples[1:]):
        if t <= t1:
            return space.interpolate(p0, p1, (t - t0) / (t1 - t0))
    return samples[-1][1]


def space_to_json(space) -> dict:
    if isinstance(space, EuclideanSpace):
        return {"kind": "euclidean", "dim": space.dim}
    if isinstance(space, CircleSpace):
        return {"kind": "circle"}
    if isinstance(space, GraphSpace):
        return {
            "kind": "graph",
            "edges": [[eid, u, v, format_rational(w)] for eid, u, v, w in space.edges],
        }
    raise SpaceError(f"unknown space {space!r}")


def space_from_json(doc) -> object:
    kind = doc.get("kind")
    if kind == "euclidean":
        return EuclideanSpace(int(doc["dim"]))
    if kind == "circle":
        return CIRCLE
    if kind == "graph":
        edges = tuple((e[0], e[1], e[2], parse_rational(e[3])) for e in doc["edges"])
        return GraphSpace(edges)
    raise SpaceError(f"unknown space kind {kind!r}")
