"""Assembly of the standard fact base from the shipped data directory.

The pipeline loads every triangulation under data/complexes, computes its
rational cohomology facts (plus mod-2 facts, which certify
non-contractibility where rational cohomology is blind), loads the directly
entered rings under data/rings, merges the cited axiom packs under
data/facts, and runs the propagation engine.  Rational results are labeled
"Q (= R)": for a finite complex the real and rational cup data agree, so
the rules stated over {Q, R} may consume them.
"""

from __future__ import annotations

import os
from pathlib import Path

from .errors import DomainError
from .facts import INF, FactBase, load_facts
from .fields import RATIONALS, FieldSpec
from .rings import (
    GradedAlgebra,
    SearchLimits,
    cup_length,
    has_nonzero_positive_degree,
    load_ring,
    zero_divisor_cup_length,
)
from .simplicial import cohomology_ring, load_complex

GF2 = FieldSpec(2)


def default_data_dir() -> Path:
    env = os.environ.get("INTERTWINE_DATA")
    if env:
        return Path(env)
    probe = Path.cwd()
    for candidate in (probe, *probe.parents):
        if (candidate / "data" / "complexes").is_dir():
            return candidate / "data"
    packaged = Path(__file__).resolve().parent.parent.parent / "data"
    if (packaged / "complexes").is_dir():
        return packaged
    raise DomainError(
        "no data directory found; set INTERTWINE_DATA or run inside the repository"
    )


def ring_facts(base: FactBase, A: GradedAlgebra, space: str, source: str,
               with_zcl: bool = True, limits: SearchLimits = SearchLimits()) -> None:
    """Assert cl, zcl[2], and H+ facts computed from a graded ring."""
    flabel = "Q" if A.field.p == 0 else A.field.label
    note = "Q (= R)" if A.field.p == 0 else flabel
    positive, _deg = has_nonzero_positive_degree(A)
    base.assert_fact(space, ("H+", flabel), 1 if positive else 0,
                     1 if positive else 0, "computed",
                     f"cohomology of {source} over {note}")
    cl = cup_length(A, limits)
    base.assert_fact(space, ("cl", flabel), cl.value,
                     INF if cl.truncated else cl.value, "computed",
                     f"cup length over {note} from {source}"
                     + (" [search-truncated]" if cl.truncated else ""))
    if with_zcl:
        zcl = zero_divisor_cup_length(A, 2, limits)
        base.assert_fact(space, ("zcl", 2, flabel), zcl.value,
                         INF if zcl.truncated else zcl.value, "computed",
                         f"zero-divisor cup length over {note} from {source}"
                         + (" [search-truncated]" if zcl.truncated else ""))


def build_standard_base(data_dir=None, m_range=(2, 3, 4, 5),
                        use_r16: bool = True,
                        limits: SearchLimits = SearchLimits()) -> FactBase:
    data = Path(data_dir) if data_dir else default_data_dir()
    base = FactBase(m_range=m_range, use_r16=use_r16)

    complexes_dir = data / "complexes"
    if complexes_dir.is_dir():
        for path in sorted(complexes_dir.glob("*.cx")):
            K = load_complex(path)
            base.ensure_space(K.name)
            ring_q = cohomology_ring(K, RATIONALS)
            ring_facts(base, ring_q, K.name, f"the {K.name} triangulation",
                       limits=limits)
            ring_2 = cohomology_ring(K, GF2)
            ring_facts(base, ring_2, K.name, f"the {K.name} triangulation",
                       with_zcl=False, limits=limits)

    rings_dir = data / "rings"
    if rings_dir.is_dir():
        for path in sorted(rings_dir.glob("*.ring")):
            A = load_ring(path)
            base.ensure_space(A.name)
            ring_facts(base, A, A.name, f"the ring file {path.name}", limits=limits)

    facts_dir = data / "facts"
    if facts_dir.is_dir():
        for path in sorted(facts_dir.glob("*.facts")):
            load_facts(base, path)

    base.propagate()
    return base


def higman_separation_rows(base: FactBase):
    """Per-m intervals for the flagship strict separation, with flags."""
    rows = []
    for m in base.m_range:
        i_lo, i_hi = base.peek("higman", ("iTC", m))
        d_lo, d_hi = base.peek("higman", ("dTC", m))
        strict = i_hi != INF and d_lo > i_hi
        rows.append((m, (i_lo, i_hi), (d_lo, d_hi), strict))
    return rows
