"""Executable navigation constructions.

Four pieces fit together here:

* theta_concat glues m paths with matching endpoints into one path whose
  time axis is split at 1/a_1 < ... < 1/a_{m-1} by a strictly descending
  timestamp scheme a_1 > ... > a_{m-1} > 1.  All breakpoint identities are
  exact rational equalities.

* join_weights(m, t) evaluates the partition-of-unity weights built from
  the interpolation polynomials vanishing at the standard timestamps
  t_i = (i-1)/(m-1): with z_j(t) the product of (t - t_i) over i != j and
  y_j = z_j / z_j(t_j), the weights are w_j = y_j^2 / sum_i y_i^2.  The
  denominator is a sum of squares that never vanishes, the weights are
  exact rationals in [0, 1], sum to 1, and satisfy w_j(t_i) = delta_ij.

* circle_navigate emits, for any two circle points, the half-weight pair
  of the clockwise and counterclockwise arcs from x to y together with its
  two-strand branching diagram.  No arc is ever chosen over the other -
  for antipodal points both arcs are geodesics and the construction is
  blind to the tie, which is exactly why it stays continuous where a
  single-arc rule cannot be.

* sequential_compose chains a pairwise navigation through a list of
  waypoints using the uniform scheme a_i = (m-1)/i, producing a measure
  path that is Dirac at every timestamp and a chained branching diagram
  whose junctions are full meeting groups; resolvability is certified by
  minimal-support enumeration on the emitted diagram.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError
from .exact import parse_rational, rational
from .spaces import CIRCLE, interpolate_samples
from .strands import (
    BranchingDiagram,
    MeetingGroup,
    Resolver,
    Strand,
    ensure_valid,
    enumerate_resolvers,
    min_support,
    pushforward,
)


@dataclass(frozen=True)
class SampledPath:
    """Piecewise-linear path: strictly increasing rational times in [0,1]."""

    space: object
    samples: tuple  # ((time, point), ...)

    def __post_init__(self):
        ts = [t for t, _p in self.samples]
        if len(ts) < 2 or ts[0] != 0 or ts[-1] != 1:
            raise DomainError("path samples must run from time 0 to time 1")
        if any(a >= b for a, b in zip(ts, ts[1:])):
            raise DomainError("path sample times must be strictly increasing")

    def at(self, t):
        return interpolate_samples(self.space, self.samples, t)

    def start(self):
        return self.samples[0][1]

    def end(self):
        return self.samples[-1][1]


@dataclass(frozen=True)
class TimestampScheme:
    values: tuple  # a_1 > a_2 > ... > a_{m-1}, all rational > 1

    @staticmethod
    def of(values) -> "TimestampScheme":
        vals = tuple(parse_rational(v) for v in values)
        if any(v <= 1 for v in vals):
            raise DomainError("timestamp entries must exceed 1")
        if any(a <= b for a, b in zip(vals, vals[1:])):
            raise DomainError("timestamp entries must strictly descend")
        return TimestampScheme(vals)

    @staticmethod
    def uniform(m: int) -> "TimestampScheme":
        """a_i = (m-1)/i, the scheme with equally spaced breakpoints."""
        if m < 2:
            raise DomainError("uniform scheme needs at least two paths")
        return TimestampScheme.of([rational(m - 1, i) for i in range(1, m)])

    @property
    def breakpoints(self) -> tuple:
        return tuple(1 / a for a in self.values)


def theta_concat(paths, scheme: TimestampScheme) -> SampledPath:
    """Concatenate paths with exact breakpoints at 1/a_i."""
    m = len(paths)
    if m < 2:
        raise DomainError("concatenation needs at least two paths")
    if len(scheme.values) != m - 1:
        raise DomainError(
            f"scheme has {len(scheme.values)} entries for {m} paths (need {m - 1})"
        )
    space = paths[0].space
    if any(p.space != space for p in paths):
        raise DomainError("all paths must live in the same space")
    for i in range(m - 1):
        if space.canon(paths[i].end()).key() != space.canon(paths[i + 1].start()).key():
            raise DomainError(
                f"endpoint mismatch: path {i + 1} ends away from where path {i + 2} starts"
            )
    a = scheme.values

    def to_global(i: int, s):
        if i == 0:
            return s / a[0]
        if i == m - 1:
            return (1 - s * (1 - a[m - 2])) / a[m - 2]
        return (s * (a[i - 1] - a[i]) + a[i]) / (a[i] * a[i - 1])

    out = []
    for i, p in enumerate(paths):
        for t, point in p.samples:
            g = to_global(i, t)
            if out and out[-1][0] == g:
                continue
            out.append((g, point))
    return SampledPath(space, tuple(out))


def join_weights(m: int, t) -> tuple:
    """Exact partition-of-unity weights (w_1(t), ..., w_m(t))."""
    if m < 2:
        raise DomainError("join weights need m >= 2")
    t = parse_rational(t)
    stamps = [rational(i, m - 1) for i in range(m)]
    ys = []
    for j in range(m):
        num = rational(1)
        den = rational(1)
        for i in range(m):
            if i == j:
                continue
            num *= t - stamps[i]
            den *= stamps[j] - stamps[i]
        ys.append(num / den)
    total = sum(y * y for y in ys)
    return tuple((y * y) / total for y in ys)


# ---------------------------------------------------------------------------
# Circle navigation
# ---------------------------------------------------------------------------

def circle_navigate(x, y, sample_count: int = 8, measure_grid: int = 16):
    """Half-weight pair of the two arcs from x to y, with its diagram.

    Returns (measure path samples, BranchingDiagram); the measure path is a
    list of (time, FiniteMeasure) pairs on a uniform grid.  When x == y both
    strands degenerate to the constant path and the diagram carries a single
    unit-weight strand.
    """
    x = CIRCLE.canon(x)
    y = CIRCLE.canon(y)
    times = [rational(k, sample_count) for k in range(sample_count + 1)]
    if x.key() == y.key():
        strand = Strand("hold", rational(1), tuple((t, x) for t in times))
        diagram = BranchingDiagram(
            name="circle-hold",
            space=CIRCLE,
            event_times=(rational(0), rational(1)),
            intervals=((strand,),),
            events=(),
            notes="degenerate navigation: start and goal coincide",
        )
    else:
        diff = x.turns - y.turns
        cw_len = diff - (diff.numerator // diff.denominator)
        ccw_len = 1 - cw_len
        cw = tuple((t, CIRCLE.lifted(x.turns - t * cw_len)) for t in times)
        ccw = tuple((t, CIRCLE.lifted(x.turns + t * ccw_len)) for t in times)
        diagram = BranchingDiagram(
            name="circle-pair",
            space=CIRCLE,
            event_times=(rational(0), rational(1)),
            intervals=((Strand("ccw", rational(1, 2), ccw),
                        Strand("cw", rational(1, 2), cw)),),
            events=(),
            notes="both arcs are always emitted; antipodal inputs need no tie-break",
        )
    ensure_valid(diagram)
    resolver = Resolver.of({(s.id,): s.weight for s in diagram.intervals[0]})
    grid = [rational(k, measure_grid) for k in range(measure_grid + 1)]
    measures = pushforward(resolver, diagram, grid)
    return list(zip(grid, measures)), diagram


# ---------------------------------------------------------------------------
# Sequential composition
# ---------------------------------------------------------------------------

def sequential_compose(nav2, points, measure_grid: int = 16):
    """Chain a pairwise navigation through waypoints x_1, ..., x_m.

    nav2(x, y) must return (measure path samples, BranchingDiagram) with
    Dirac endpoints.  Segment i is rescaled into [t_i, t_{i+1}] for the
    standard timestamps t_i = (i-1)/(m-1) (the uniform scheme); junction
    events are full meeting groups, as forced by the Dirac values there.
    Returns (measure path samples, BranchingDiagram).
    """
    m = len(points)
    if m < 2:
        raise DomainError("sequential navigation needs at least two waypoints")
    if m == 2:
        return nav2(points[0], points[1])

    segments = [nav2(points[i], points[i + 1]) for i in range(m - 1)]
    stamps = [rational(i, m - 1) for i in range(m)]

    event_times: list = [rational(0)]
    intervals: list = []
    events: list = []
    space = segments[0][1].space
    prev_last_ids: list = []
    for i, (_samples, seg) in enumerate(segments):
        if seg.space != space:
            raise DomainError("all segments must live in the same space")
        lo = stamps[i]
        width = stamps[i + 1] - lo
        rename = lambda sid: f"s{i}.{sid}"  # noqa: E731 - tiny local alias
        if i > 0:
            junction = MeetingGroup.of(
                prev_last_ids, [rename(s.id) for s in seg.intervals[0]]
            )
            events.append((junction,))
        for j, iv in enumerate(seg.intervals):
            intervals.append(tuple(
                Strand(
                    rename(s.id),
                    s.weight,
                    tuple((lo + t * width, p) for t, p in s.samples),
                )
                for s in iv
            ))
            event_times.append(lo + seg.event_times[j + 1] * width)
            if j < len(seg.events):
                events.append(tuple(
                    MeetingGroup.of(
                        [rename(sid) for sid in g.incoming],
                        [rename(sid) for sid in g.outgoing],
                    )
                    for g in seg.events[j]
                ))
        prev_last_ids = [rename(s.id) for s in seg.intervals[-1]]

    diagram = BranchingDiagram(
        name="sequential-navigation",
        space=space,
        event_times=tuple(event_times),
        intervals=tuple(intervals),
        events=tuple(events),
        notes=f"{m}-waypoint composition with uniform timestamps",
    )
    ensure_valid(diagram)
    support = min_support(diagram)
    resolver = enumerate_resolvers(diagram, support).vertex_resolvers[0]
    grid = sorted(set(rational(k, measure_grid) for k in range(measure_grid + 1))
                  | set(stamps))
    measures = pushforward(resolver, diagram, grid)
    return list(zip(grid, measures)), diagram
