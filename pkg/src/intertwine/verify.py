"""The reproduction suite behind `intertwine verify-paper`.

Each check re-derives one block of published values from scratch - cup
lengths, kernel cup lengths, the propagated invariant table, resolver
counts, pushforward well-definedness, the trace dichotomy, support
continuity, the navigation formulas, and the metric axioms - and reports
pass/fail with a one-line detail.  The same checks back the acceptance
test module, so the CLI table and the test suite cannot diverge.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from .corpus import non_resolvable_sample_path
from .exact import rational
from .facts import INF, fmt_interval, parse_invariant, replay_trace
from .fields import RATIONALS
from .measures import FiniteMeasure, FiniteSet, dirac, hausdorff_distance, lp_distance
from .navigate import SampledPath, TimestampScheme, circle_navigate, join_weights, \
    sequential_compose, theta_concat
from .pipeline import build_standard_base, default_data_dir, higman_separation_rows
from .rings import cup_length, zero_divisor_cup_length
from .simplicial import cohomology_ring, load_complex
from .spaces import CIRCLE, LINE, EuclideanSpace
from .strands import (
    check_resolver,
    enumerate_resolvers,
    load_diagram,
    min_support,
    pushforward,
    support3_counterexample_check,
    support_steps,
    symmetric_trace,
)

Q = rational


@dataclass
class CheckResult:
    ident: str
    name: str
    passed: bool
    detail: str


def _ring(data: Path, name: str):
    return cohomology_ring(load_complex(data / "complexes" / f"{name}.cx"), RATIONALS)


def check_cup_lengths(data: Path) -> CheckResult:
    expected = {"s1": 1, "s2": 1, "t2": 2, "genus2": 2}
    got = {name: cup_length(_ring(data, name)).value for name in expected}
    ok = got == expected
    return CheckResult("C1", "rational cup lengths", ok, f"{got}")


def check_zero_divisor_cup_lengths(data: Path) -> CheckResult:
    expected = {"s1": 1, "s2": 2, "wedge2s1": 2, "t2": 2}
    got = {n: zero_divisor_cup_length(_ring(data, n), 2).value for n in expected}
    ok = got == expected
    return CheckResult("C2", "rational zero-divisor cup lengths", ok, f"{got}")


def check_bounds_engine(data: Path) -> CheckResult:
    base = build_standard_base(data)
    expected = {
        ("T2", "icat"): (2, 2), ("T2", "iTC"): (2, 2),
        ("genus2", "icat"): (2, 2), ("S2xS2", "icat"): (2, 2),
        ("CP2", "icat"): (2, 2), ("S2", "iTC"): (2, 2),
        ("S1", "iTC"): (1, 1), ("S1", "iTC[3]"): (2, 2),
        ("S3xS3", "iTC"): (2, 2), ("wedge2S1", "iTC"): (2, 2),
        ("RP2", "icat"): (1, 1), ("RP2", "iTC"): (1, 1),
    }
    problems = []
    for (space, inv), want in expected.items():
        lo, hi, ln, hn = base.derive(space, parse_invariant(inv))
        if (lo, hi) != want:
            problems.append(f"{space} {inv} = {fmt_interval(lo, hi)}, wanted {want}")
            continue
        replay_trace(ln)
        replay_trace(hn)
    # the torus value must come through the topological-group equality
    _lo, _hi, _ln, hn = base.derive("T2", parse_invariant("iTC"))
    if "R6" not in _labels(hn):
        problems.append("iTC(T2) upper trace does not use the group rule R6")
    _lo, _hi, ln, _hn = base.derive("S1", parse_invariant("iTC[3]"))
    if "R13" not in _labels(ln):
        problems.append("iTC[3](S1) lower trace does not use R13")
    return CheckResult("C3", "bounds engine reproduces the published table",
                       not problems, "; ".join(problems) or "12 intervals exact")


def _labels(node) -> set:
    out = {node.label}
    for p in node.premises:
        out |= _labels(p)
    return out


def check_higman_separation(data: Path) -> CheckResult:
    base = build_standard_base(data)
    problems = []
    for m, (ilo, ihi), (dlo, dhi), strict in higman_separation_rows(base):
        if (ilo, ihi) != (1, 1):
            problems.append(f"iTC[{m}](higman) = {fmt_interval(ilo, ihi)}")
        if dlo != 2 * (m - 1) or dhi != INF:
            problems.append(f"dTC[{m}](higman) = {fmt_interval(dlo, dhi)}")
        if not strict:
            problems.append(f"m={m} separation not flagged strict")
    return CheckResult("C4", "Higman group strict separation", not problems,
                       "; ".join(problems) or "iTC=1 < dTC >= 2(m-1) for m=2..5")


def check_resolver_counts(data: Path) -> CheckResult:
    problems = []
    d1 = load_diagram(data / "diagrams" / "example1.bd")
    for n in (2, 3):
        e = enumerate_resolvers(d1, n)
        if len(e.vertex_resolvers) != 2 or e.polytope_dimension != 1:
            problems.append(f"example1 at n={n}: {len(e.vertex_resolvers)} vertices, "
                            f"dim {e.polytope_dimension}")
    d2 = load_diagram(data / "diagrams" / "example2.bd")
    if enumerate_resolvers(d2, 2).vertex_resolvers:
        problems.append("example2 has a support-2 resolver")
    if min_support(d2) != 3:
        problems.append(f"example2 min support {min_support(d2)}")
    d3 = load_diagram(data / "diagrams" / "example3.bd")
    if min_support(d3) != 4:
        problems.append(f"example3 min support {min_support(d3)}")
    d4 = load_diagram(data / "diagrams" / "example4.bd")
    e4 = enumerate_resolvers(d4, 4)
    if len(e4.vertex_resolvers) < 12:
        problems.append(f"example4 has {len(e4.vertex_resolvers)} support-4 vertices")
    for diagram in (d1, d2, d3, d4):
        for v in enumerate_resolvers(diagram, 64).all_vertices:
            bad = check_resolver(diagram, v)
            if bad:
                problems.append(f"{diagram.name}: {bad[0]}")
                break
    detail = "; ".join(problems) if problems else (
        f"example4 carries {len(e4.vertex_resolvers)} support-4 vertex resolvers"
    )
    return CheckResult("C5", "resolver counts and exact weights", not problems, detail)


def check_pushforward_welldefined(data: Path) -> CheckResult:
    times = [Q(k, 100) for k in range(101)]
    problems = []
    total = 0
    for path in sorted((data / "diagrams").glob("*.bd")):
        diagram = load_diagram(path)
        vertices = enumerate_resolvers(diagram, 64).all_vertices
        seqs = [pushforward(v, diagram, times) for v in vertices]
        total += len(seqs)
        if any(s != seqs[0] for s in seqs[1:]):
            problems.append(f"{diagram.name}: resolver-dependent pushforward")
        if not seqs[0][0].is_dirac() or not seqs[0][-1].is_dirac():
            problems.append(f"{diagram.name}: endpoints not Dirac")
    return CheckResult("C6", "pushforward is resolver-independent", not problems,
                       "; ".join(problems) or f"{total} resolvers agree at 101 times")


def check_trace_dichotomy(data: Path) -> CheckResult:
    times = [Q(k, 64) for k in range(65)]
    problems = []
    for path in sorted((data / "diagrams").glob("*.bd")):
        diagram = load_diagram(path)
        pairs = [v for v in enumerate_resolvers(diagram, 2).vertex_resolvers]
        traces = [symmetric_trace(v, diagram, times) for v in pairs]
        if any(t != traces[0] for t in traces[1:]):
            problems.append(f"{diagram.name}: support-2 trace depends on the resolver")
    counter = load_diagram(data / "diagrams" / "counterexample71.bd")
    if not support3_counterexample_check(counter):
        problems.append("counterexample71 fails to exhibit the support-3 breakdown")
    d1 = load_diagram(data / "diagrams" / "example1.bd")
    if support3_counterexample_check(d1):
        problems.append("example1 spuriously exhibits the breakdown")
    return CheckResult("C7", "symmetric-trace dichotomy", not problems,
                       "; ".join(problems) or "invariant at support 2, broken at 3")


def check_support_continuity(data: Path) -> CheckResult:
    d1 = load_diagram(data / "diagrams" / "example1.bd")
    resolver = enumerate_resolvers(d1, 2).vertex_resolvers[0]
    steps = {}
    for denom in (100, 200):
        times = [Q(k, denom) for k in range(denom + 1)]
        steps[denom] = max(support_steps(pushforward(resolver, d1, times)))
    ratio = steps[200] / steps[100]
    ok = ratio <= 0.55  # halving dt must at least halve the step, within 10%
    jumps = []
    for denom in (100, 200):
        samples = non_resolvable_sample_path(Q(1, denom))
        jumps.append(max(support_steps([mu for _t, mu in samples])))
    ok = ok and all(j >= 0.2 for j in jumps)
    detail = (f"max step {steps[100]:.4f} -> {steps[200]:.4f} (ratio {ratio:.3f}); "
              f"non-resolvable jump stays at {jumps[0]:.2f}")
    return CheckResult("C8", "support continuity scaling", ok, detail)


def check_navigation_formulas(data: Path) -> CheckResult:
    problems = []
    rng = random.Random(60901)
    probes = [Q(rng.randrange(0, 98), 97) for _ in range(1000)]
    for m in range(2, 9):
        for i in range(m):
            ws = join_weights(m, Q(i, m - 1))
            if any(w != (1 if j == i else 0) for j, w in enumerate(ws)):
                problems.append(f"join weight delta fails at m={m}, i={i}")
        for t in probes:
            ws = join_weights(m, t)
            if sum(ws) != 1 or any(w < 0 or w > 1 for w in ws):
                problems.append(f"join weight partition fails at m={m}, t={t}")
                break
    p1 = SampledPath(LINE, ((Q(0), LINE.point(0)), (Q(1), LINE.point(1))))
    p2 = SampledPath(LINE, ((Q(0), LINE.point(1)), (Q(1), LINE.point(3))))
    p3 = SampledPath(LINE, ((Q(0), LINE.point(3)), (Q(1), LINE.point(0))))
    glued = theta_concat([p1, p2, p3], TimestampScheme.of([3, Q(3, 2)]))
    if glued.at(Q(1, 3)) != LINE.point(1) or glued.at(Q(2, 3)) != LINE.point(3):
        problems.append("concatenation misses an exact breakpoint")
    for trial in range(50):
        pts = [CIRCLE.point(Q(rng.randrange(0, 64), 64)) for _ in range(3)]
        while len({p.key() for p in pts}) < 3:
            pts = [CIRCLE.point(Q(rng.randrange(0, 64), 64)) for _ in range(3)]
        _samples, diagram = sequential_compose(circle_navigate, pts)
        if min_support(diagram) != 2:
            problems.append(f"triple {pts} needs support {min_support(diagram)}")
            break
    return CheckResult("C9", "navigation formulas", not problems,
                       "; ".join(problems) or
                       "exact weights (m<=8, 1000 probes), breakpoints, 50 triples")


def _random_point(rng, space):
    if isinstance(space, EuclideanSpace):
        return space.point(*[Q(rng.randrange(-32, 33), 16) for _ in range(space.dim)])
    return space.point(Q(rng.randrange(0, 64), 64))


def _random_measure(rng, space, max_atoms):
    k = rng.randint(1, max_atoms)
    points = [_random_point(rng, space) for _ in range(k)]
    cuts = sorted(rng.randrange(1, 8) for _ in range(k - 1))
    weights = []
    prev = 0
    for c in cuts + [8]:
        weights.append(Q(c - prev, 8))
        prev = c
    pairs = [(p, w) for p, w in zip(points, weights) if w > 0]
    return FiniteMeasure.from_pairs(space, pairs)


def check_metric_suites(data: Path, instances: int = 10_000) -> CheckResult:
    rng = random.Random(20240914)
    spaces = [EuclideanSpace(1), EuclideanSpace(2), CIRCLE]
    tol = 2e-9
    problems = []

    for i in range(instances):
        space = spaces[i % len(spaces)]
        a = _random_point(rng, space)
        b = _random_point(rng, space)
        c = _random_point(rng, space)
        A = FiniteSet.of(space, [a, b])
        B = FiniteSet.of(space, [b, c])
        C = FiniteSet.of(space, [c, a])
        dab, dbc, dca = (hausdorff_distance(A, B), hausdorff_distance(B, C),
                         hausdorff_distance(C, A))
        if abs(hausdorff_distance(A, A)) > tol or abs(dab - hausdorff_distance(B, A)) > tol:
            problems.append(f"hausdorff axiom fails at instance {i}")
            break
        if dca > dab + dbc + tol:
            problems.append(f"hausdorff triangle fails at instance {i}")
            break

    kind_seq = ("identity", "identity", "symmetry", "triangle")
    for i in range(instances):
        space = spaces[i % len(spaces)]
        kind = kind_seq[i % len(kind_seq)]
        max_atoms = 3 if i % 10 == 0 else 2
        mu = _random_measure(rng, space, max_atoms)
        if kind == "identity":
            if lp_distance(mu, mu) > tol:
                problems.append(f"lp identity fails at instance {i}")
                break
        elif kind == "symmetry":
            nu = _random_measure(rng, space, max_atoms)
            if lp_distance(mu, nu) != lp_distance(nu, mu):
                problems.append(f"lp symmetry fails at instance {i}")
                break
        else:
            nu = _random_measure(rng, space, max_atoms)
            rho = _random_measure(rng, space, max_atoms)
            if lp_distance(mu, rho) > lp_distance(mu, nu) + lp_distance(nu, rho) + tol:
                problems.append(f"lp triangle fails at instance {i}")
                break

    for i in range(100):
        space = spaces[i % len(spaces)]
        x = _random_point(rng, space)
        y = _random_point(rng, space)
        got = lp_distance(dirac(space, x), dirac(space, y))
        want = min(space.distance(x, y), 1.0)
        if abs(got - want) > tol:
            problems.append(f"dirac lp formula off by {abs(got - want):.2e}")
            break

    return CheckResult("C10", "metric axiom suites", not problems,
                       "; ".join(problems) or
                       f"{instances} Hausdorff + {instances} LP instances, 100 dirac pairs")


ALL_CHECKS = (
    check_cup_lengths,
    check_zero_divisor_cup_lengths,
    check_bounds_engine,
    check_higman_separation,
    check_resolver_counts,
    check_pushforward_welldefined,
    check_trace_dichotomy,
    check_support_continuity,
    check_navigation_formulas,
    check_metric_suites,
)


def verify_paper(data_dir=None) -> list[CheckResult]:
    data = Path(data_dir) if data_dir else default_data_dir()
    return [check(data) for check in ALL_CHECKS]
