"""Branching diagrams: weighted strands, resolvers, and their traces.

A BranchingDiagram is the combinatorial form of a weight-conserving motion
of a distribution: between consecutive event times it consists of weighted
strands; at each interior event the strands are partitioned into meeting
groups, and within a group incoming and outgoing weight must balance.  An
optional realization attaches to every strand a piecewise-linear sample
path in one of the shipped metric spaces; strands of one meeting group are
then required to sit at exactly the same point at the event time.

A Route picks one strand per interval, consecutive strands sharing a
meeting group.  A Resolver is an exact route-weight vector satisfying, for
every strand, (total weight of routes through the strand) = (strand
weight).  The feasible resolvers form a bounded polyhedron; its vertices
(basic feasible solutions) are enumerated exactly by rational elimination
over route subsets.  Vertices minimize support among the faces containing
them, so the minimal number of routes needed is the minimum vertex support
and a zero-dimensional polytope means the vertex list is the complete set
of resolvers.

Collapsing a resolver to a time-indexed measure (each route contributing
its weight at its current position) is resolver-independent by the
marginal constraints; this collapse is the pushforward of the
route-weight measure to a path of finitely supported distributions.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import comb

from .errors import BudgetError, DomainError
from .exact import Q1, format_rational, parse_rational, rational
from .fields import RATIONALS, independent_row_indices, rank
from .measures import FiniteMeasure, FiniteSet, hausdorff_distance
from .spaces import interpolate_samples, space_from_json, space_to_json


@dataclass(frozen=True)
class Strand:
    id: str
    weight: object  # positive rational
    samples: tuple = None  # ((time, point), ...) or None when unrealized


@dataclass(frozen=True)
class MeetingGroup:
    incoming: tuple  # sorted strand ids from the interval before the event
    outgoing: tuple  # sorted strand ids from the interval after the event

    @staticmethod
    def of(incoming, outgoing) -> "MeetingGroup":
        return MeetingGroup(tuple(sorted(incoming)), tuple(sorted(outgoing)))


@dataclass(frozen=True)
class BranchingDiagram:
    name: str
    space: object  # None when unrealized
    event_times: tuple  # rationals, 0 = t_0 < ... < t_K = 1
    intervals: tuple   # intervals[j] = tuple of Strand
    events: tuple      # events[j] = meeting groups at event_times[j+1]
    notes: str = ""

    def strand(self, interval: int, sid: str) -> Strand:
        for s in self.intervals[interval]:
            if s.id == sid:
                return s
        raise DomainError(f"no strand {sid!r} in interval {interval}")

    def interval_of(self, t) -> int:
        times = self.event_times
        for j in range(len(times) - 1):
            if t < times[j + 1]:
                return j
        return len(times) - 2

    def is_realized(self) -> bool:
        return self.space is not None and all(
            s.samples is not None for iv in self.intervals for s in iv
        )


@dataclass(frozen=True)
class Resolver:
    """Exact route weights; routes are tuples of strand ids, one per interval."""

    weights: tuple  # sorted ((route, weight), ...), weights > 0

    @staticmethod
    def of(mapping) -> "Resolver":
        items = tuple(sorted((tuple(r), parse_rational(w)) for r, w in dict(mapping).items()
                             if parse_rational(w) != 0))
        return Resolver(items)

    @property
    def support_size(self) -> int:
        return len(self.weights)

    def routes(self):
        return [r for r, _w in self.weights]

    def weight(self, route):
        for r, w in self.weights:
            if r == tuple(route):
                return w
        return rational(0)

    def describe(self) -> str:
        return " + ".join(
            f"{format_rational(w)}*({'>'.join(r)})" for r, w in self.weights
        )


# ---------------------------------------------------------------------------
# Validation
# ---------------------------------------------------------------------------

def validate(diagram: BranchingDiagram) -> list[str]:
    """All diagram invariants, exactly; returns a list of diagnostics."""
    problems = []
    times = diagram.event_times
    if len(times) < 2 or times[0] != 0 or times[-1] != 1:
        problems.append("event times must run from 0 to 1")
    if any(times[i] >= times[i + 1] for i in range(len(times) - 1)):
        problems.append("event times must be strictly increasing")
    if len(diagram.intervals) != len(times) - 1:
        problems.append(
            f"{len(diagram.intervals)} intervals for {len(times)} event times"
        )
        return problems
    if len(diagram.events) != len(times) - 2:
        problems.append(
            f"{len(diagram.events)} event partitions for {len(times) - 2} interior events"
        )
        return problems

    for j, interval in enumerate(diagram.intervals):
        ids = [s.id for s in interval]
        if len(set(ids)) != len(ids):
            problems.append(f"interval {j}: duplicate strand ids")
        if any(s.weight <= 0 for s in interval):
            problems.append(f"interval {j}: non-positive strand weight")
        total = sum(s.weight for s in interval)
        if total != Q1:
            problems.append(
                f"interval {j}: interval mass != 1 (strand weights sum to "
                f"{format_rational(total)})"
            )

    for e, groups in enumerate(diagram.events):
        left = {s.id for s in diagram.intervals[e]}
        right = {s.id for s in diagram.intervals[e + 1]}
        seen_in, seen_out = [], []
        for g in groups:
            seen_in.extend(g.incoming)
            seen_out.extend(g.outgoing)
            win = sum(diagram.strand(e, sid).weight for sid in g.incoming
                      if sid in left)
            wout = sum(diagram.strand(e + 1, sid).weight for sid in g.outgoing
                       if sid in right)
            if win != wout:
                problems.append(
                    f"event {e + 1}: meeting group {g.incoming}->{g.outgoing} "
                    f"unbalanced ({format_rational(win)} in, {format_rational(wout)} out)"
                )
        if sorted(seen_in) != sorted(left) or len(seen_in) != len(set(seen_in)):
            problems.append(f"event {e + 1}: incoming strands not partitioned")
        if sorted(seen_out) != sorted(right) or len(seen_out) != len(set(seen_out)):
            problems.append(f"event {e + 1}: outgoing strands not partitioned")

    problems.extend(_validate_realization(diagram))
    return problems


def _validate_realization(diagram: BranchingDiagram) -> list[str]:
    sampled = [s for iv in diagram.intervals for s in iv if s.samples is not None]
    if not sampled:
        return []
    problems = []
    if diagram.space is None:
        return ["realized strands but no metric space"]
    all_strands = [s for iv in diagram.intervals for s in iv]
    if len(sampled) != len(all_strands):
        problems.append("realization must cover every strand or none")
        return problems
    for j, interval in enumerate(diagram.intervals):
        lo, hi = diagram.event_times[j], diagram.event_times[j + 1]
        for s in interval:
            ts = [t for t, _p in s.samples]
            if ts[0] != lo or ts[-1] != hi:
                problems.append(
                    f"strand {s.id}: samples span [{format_rational(ts[0])}, "
                    f"{format_rational(ts[-1])}], interval is [{format_rational(lo)}, "
                    f"{format_rational(hi)}]"
                )
            if any(a >= b for a, b in zip(ts, ts[1:])):
                problems.append(f"strand {s.id}: sample times not increasing")
    canon = diagram.space.canon
    for e, groups in enumerate(diagram.events):
        tau = diagram.event_times[e + 1]
        for g in groups:
            points = []
            for sid in g.incoming:
                points.append(canon(strand_position(diagram, e, sid, tau)))
            for sid in g.outgoing:
                points.append(canon(strand_position(diagram, e + 1, sid, tau)))
            keys = {p.key() for p in points}
            if len(keys) > 1:
                problems.append(
                    f"event {e + 1}: meeting point mismatch in group "
                    f"{g.incoming}->{g.outgoing}"
                )
    return problems


def ensure_valid(diagram: BranchingDiagram) -> None:
    problems = validate(diagram)
    if problems:
        raise DomainError(f"invalid diagram {diagram.name!r}: " + "; ".join(problems))


# ---------------------------------------------------------------------------
# Realized positions
# ---------------------------------------------------------------------------

def strand_position(diagram: BranchingDiagram, interval: int, sid: str, t):
    """Exact position of a strand at time t (linear between samples)."""
    s = diagram.strand(interval, sid)
    if s.samples is None:
        raise DomainError(f"strand {sid!r} carries no realization")
    return interpolate_samples(diagram.space, s.samples, t)


def route_position(diagram: BranchingDiagram, route, t):
    j = diagram.interval_of(t)
    return diagram.space.canon(strand_position(diagram, j, route[j], t))


# ---------------------------------------------------------------------------
# Routes and resolvers
# ---------------------------------------------------------------------------

def enumerate_routes(diagram: BranchingDiagram, cap: int = 10**6) -> list[tuple]:
    """All meeting-compatible routes, lexicographically ordered."""
    ensure_valid(diagram)
    successor = []
    for groups in diagram.events:
        table = {}
        for g in groups:
            for sid in g.incoming:
                table[sid] = list(g.outgoing)
        successor.append(table)
    routes = [(s.id,) for s in diagram.intervals[0]]
    for table in successor:
        nxt = []
        for r in routes:
            for sid in table[r[-1]]:
                nxt.append(r + (sid,))
                if len(nxt) > cap:
                    raise BudgetError(
                        f"diagram {diagram.name!r}: route count exceeds cap {cap}"
                    )
        routes = nxt
    return sorted(routes)


@dataclass(frozen=True)
class ResolverEnumeration:
    diagram: BranchingDiagram
    vertex_resolvers: tuple  # support-filtered vertices, deterministic order
    polytope_dimension: int
    all_vertices: tuple

    @property
    def is_complete(self) -> bool:
        """True when the listed vertices are ALL resolvers of the diagram."""
        return self.polytope_dimension == 0


@lru_cache(maxsize=128)
def _vertex_enumeration(diagram: BranchingDiagram, cap: int):
    routes = enumerate_routes(diagram, cap)
    F = RATIONALS
    rows = []
    rhs = []
    for j, interval in enumerate(diagram.intervals):
        for s in sorted(interval, key=lambda s: s.id):
            rows.append([F.one if r[j] == s.id else F.zero for r in routes])
            rhs.append(s.weight)
    keep = independent_row_indices(F, [rows[i] + [rhs[i]] for i in range(len(rows))])
    amat = [rows[i] for i in keep]
    bvec = [rhs[i] for i in keep]
    r = len(amat)
    n = len(routes)
    if comb(n, r) > 2_000_000:
        raise BudgetError(
            f"diagram {diagram.name!r}: {comb(n, r)} basis candidates exceed budget"
        )
    vertices = {}
    for cols in combinations(range(n), r):
        sol = _solve_square(F, amat, bvec, cols)
        if sol is None:
            continue
        if any(v < 0 for v in sol):
            continue
        full = [F.zero] * n
        for c, v in zip(cols, sol):
            full[c] = v
        key = tuple(full)
        if key not in vertices:
            vertices[key] = Resolver.of(
                {routes[i]: full[i] for i in range(n) if full[i] != 0}
            )
    ordered = [vertices[k] for k in sorted(vertices, reverse=True)]
    dim = _affine_dimension(F, sorted(vertices))
    return tuple(ordered), dim, tuple(routes)


def _solve_square(F, amat, bvec, cols):
    """Solve the subsystem on the chosen columns; None when singular."""
    r = len(amat)
    work = [[amat[i][c] for c in cols] + [bvec[i]] for i in range(r)]
    for col in range(r):
        piv = None
        for i in range(col, r):
            if not F.is_zero(work[i][col]):
                piv = i
                break
        if piv is None:
            return None
        work[col], work[piv] = work[piv], work[col]
        inv = F.inv(work[col][col])
        work[col] = [F.mul(inv, x) for x in work[col]]
        for i in range(r):
            if i != col and not F.is_zero(work[i][col]):
                factor = F.neg(work[i][col])
                work[i] = [F.add(x, F.mul(factor, y)) for x, y in zip(work[i], work[col])]
    return [work[i][r] for i in range(r)]


def _affine_dimension(F, vertex_vectors) -> int:
    if len(vertex_vectors) <= 1:
        return 0
    base = vertex_vectors[0]
    diffs = [[F.sub(a, b) for a, b in zip(v, base)] for v in vertex_vectors[1:]]
    return rank(F, diffs)


def enumerate_resolvers(diagram: BranchingDiagram, n: int,
                        cap: int = 10**6) -> ResolverEnumeration:
    """Vertex resolvers with support <= n, plus the feasible-region dimension."""
    vertices, dim, _routes = _vertex_enumeration(diagram, cap)
    chosen = tuple(v for v in vertices if v.support_size <= n)
    return ResolverEnumeration(diagram, chosen, dim, vertices)


def min_support(diagram: BranchingDiagram, cap: int = 10**6) -> int:
    """Least number of routes any resolver of the diagram can have."""
    vertices, _dim, _routes = _vertex_enumeration(diagram, cap)
    if not vertices:
        raise DomainError(f"diagram {diagram.name!r} admits no resolver")
    return min(v.support_size for v in vertices)


def check_resolver(diagram: BranchingDiagram, resolver: Resolver) -> list[str]:
    """Marginal-constraint diagnostics for an explicit resolver."""
    problems = []
    total = sum(w for _r, w in resolver.weights)
    if total != Q1:
        problems.append(f"route weights sum to {format_rational(total)}, not 1")
    for j, interval in enumerate(diagram.intervals):
        for s in interval:
            through = sum(w for r, w in resolver.weights if r[j] == s.id)
            if through != s.weight:
                problems.append(
                    f"strand {s.id}: routes carry {format_rational(through)}, "
                    f"strand weight is {format_rational(s.weight)}"
                )
    return problems


# ---------------------------------------------------------------------------
# Pushforward and traces
# ---------------------------------------------------------------------------

def pushforward(resolver: Resolver, diagram: BranchingDiagram,
                sample_times) -> list[FiniteMeasure]:
    """Collapse route weights to a measure at each sample time."""
    if not diagram.is_realized():
        raise DomainError("pushforward needs a realized diagram")
    out = []
    for t in sample_times:
        pairs = [(route_position(diagram, r, t), w) for r, w in resolver.weights]
        out.append(FiniteMeasure.from_pairs(diagram.space, pairs))
    return out


def route_configuration(resolver: Resolver, diagram: BranchingDiagram, t) -> tuple:
    """Canonical multiset of per-route (weight, position) pairs at time t.

    Unlike the collapsed measure, coincident routes are NOT merged; this is
    the ordered-strand datum whose time- and resolver-invariance fails at
    support 3.
    """
    parts = []
    for r, w in resolver.weights:
        p = route_position(diagram, r, t)
        parts.append((p.key(), w, p))
    parts.sort(key=lambda x: (x[0], x[1]))
    return tuple((w, p) for _k, w, p in parts)


@dataclass(frozen=True)
class SymmetricTracePoint:
    """Unordered weighted pair with coincident points merged."""

    parts: tuple  # ((weight, point), ...) canonical

    @staticmethod
    def of(space, weighted_points) -> "SymmetricTracePoint":
        merged = {}
        points = {}
        for w, p in weighted_points:
            cp = space.canon(p)
            k = cp.key()
            merged[k] = merged.get(k, 0) + w
            points[k] = cp
        parts = tuple((merged[k], points[k]) for k in sorted(merged))
        return SymmetricTracePoint(parts)


def symmetric_trace(resolver: Resolver, diagram: BranchingDiagram,
                    sample_times) -> list[SymmetricTracePoint]:
    """The unordered weighted-pair trace of a support-<=2 resolver."""
    if resolver.support_size > 2:
        raise DomainError(
            "symmetric trace is defined for resolvers of support at most 2"
        )
    if not diagram.is_realized():
        raise DomainError("symmetric trace needs a realized diagram")
    out = []
    for t in sample_times:
        pairs = [(w, route_position(diagram, r, t)) for r, w in resolver.weights]
        out.append(SymmetricTracePoint.of(diagram.space, pairs))
    return out


def default_grid(denominator: int = 32):
    return [rational(k, denominator) for k in range(denominator + 1)]


def support3_counterexample_check(diagram: BranchingDiagram, resolvers=None,
                                  sample_times=None) -> bool:
    """Detect the support-3 failure: equal collapsed measures at two times
    whose per-route weighted configurations differ."""
    if sample_times is None:
        sample_times = default_grid(32)
    if resolvers is None:
        resolvers = enumerate_resolvers(diagram, n=len(diagram.intervals[0]) + 3).all_vertices
    for resolver in resolvers:
        measures = pushforward(resolver, diagram, sample_times)
        configs = [route_configuration(resolver, diagram, t) for t in sample_times]
        index = {}
        for i, mu in enumerate(measures):
            index.setdefault(mu.atoms, []).append(i)
        for _atoms, positions in index.items():
            for a, b in combinations(positions, 2):
                if configs[a] != configs[b]:
                    return True
    return False


# ---------------------------------------------------------------------------
# Support continuity
# ---------------------------------------------------------------------------

def support_steps(measures) -> list[float]:
    """Hausdorff distances between consecutive measure supports."""
    supports = [m.support() for m in measures]
    return [hausdorff_distance(a, b) for a, b in zip(supports, supports[1:])]


def support_continuity_report(resolver: Resolver, diagram: BranchingDiagram,
                              dt_list) -> list[tuple]:
    """(dt, max Hausdorff step between consecutive supports) per dt."""
    rows = []
    for dt in dt_list:
        dt = parse_rational(dt)
        steps = int(1 / dt)
        times = [dt * k for k in range(steps + 1)]
        measures = pushforward(resolver, diagram, times)
        gaps = support_steps(measures)
        rows.append((dt, max(gaps) if gaps else 0.0))
    return rows


# ---------------------------------------------------------------------------
# Diagram and measure-path files
# ---------------------------------------------------------------------------

def load_diagram(path) -> BranchingDiagram:
    with open(path) as fh:
        doc = json.load(fh)
    space = space_from_json(doc["space"]) if doc.get("space") else None
    parse_path_point = None
    if space is not None:
        parse_path_point = getattr(space, "parse_path_point", space.parse_point)
    intervals = []
    for iv in doc["intervals"]:
        strands = []
        for s in iv:
            samples = None
            if s.get("samples") is not None:
                samples = tuple(
                    (parse_rational(t), parse_path_point(p)) for t, p in s["samples"]
                )
            strands.append(Strand(s["id"], parse_rational(s["weight"]), samples))
        intervals.append(tuple(strands))
    events = tuple(
        tuple(MeetingGroup.of(g["in"], g["out"]) for g in ev) for ev in doc["events"]
    )
    diagram = BranchingDiagram(
        name=doc.get("name", str(path)),
        space=space,
        event_times=tuple(parse_rational(t) for t in doc["event_times"]),
        intervals=tuple(intervals),
        events=events,
        notes=doc.get("notes", ""),
    )
    ensure_valid(diagram)
    return diagram


def save_diagram(diagram: BranchingDiagram, path) -> None:
    def point_json(p):
        return diagram.space.point_json(p)

    doc = {
        "name": diagram.name,
        "space": space_to_json(diagram.space) if diagram.space else None,
        "event_times": [format_rational(t) for t in diagram.event_times],
        "intervals": [
            [
                {
                    "id": s.id,
                    "weight": format_rational(s.weight),
                    "samples": (
                        [[format_rational(t), point_json(p)] for t, p in s.samples]
                        if s.samples is not None else None
                    ),
                }
                for s in iv
            ]
            for iv in diagram.intervals
        ],
        "events": [
            [{"in": list(g.incoming), "out": list(g.outgoing)} for g in ev]
            for ev in diagram.events
        ],
        "notes": diagram.notes,
    }
    with open(path, "w") as fh:
        json.dump(doc, fh, indent=1, sort_keys=True)
        fh.write("\n")


def load_measure_path(path):
    """Sampled measure path file: [(time, FiniteMeasure), ...]."""
    with open(path) as fh:
        doc = json.load(fh)
    space = space_from_json(doc["space"])
    samples = []
    for t, atoms in doc["samples"]:
        mu = FiniteMeasure.from_pairs(
            space, [(space.parse_point(p), parse_rational(w)) for p, w in atoms]
        )
        samples.append((parse_rational(t), mu))
    return doc.get("name", str(path)), space, samples


def save_measure_path(name, space, samples, path) -> None:
    doc = {
        "name": name,
        "space": space_to_json(space),
        "samples": [
            [
                format_rational(t),
                [[space.point_json(p), format_rational(w)] for p, w in mu.atoms],
            ]
            for t, mu in samples
        ],
    }
    with open(path, "w") as fh:
        json.dump(doc, fh, indent=1, sort_keys=True)
        fh.write("\n")
