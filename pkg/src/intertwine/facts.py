"""Fact base and fixpoint inference over the invariant inequality network.

The engine stores, per (space, invariant), an integer interval [lo, hi]
(hi possibly infinite) together with a derivation trace for each side.
Facts enter as cited axioms, as computed values (cup lengths and kernel
cup lengths from the ring machinery), or as rule consequences.  Each rule
is a one-directional interval refinement; the rule set is monotone, so
repeated sweeping reaches a least fixpoint.  Narrowing to an empty
interval raises a contradiction naming both justifications.

Invariants: cat, dcat, icat, TC[m], dTC[m], iTC[m], cl[F], zcl[m,F], and
H+[F] (a 0/1 flag for nonvanishing positive-degree cohomology over F).
iTC[2] prints as plain iTC.

Rules (the bracketed ids appear in traces):

  R1   iTC[m] <= dTC[m] <= TC[m]
  R2   icat <= dcat <= cat
  R3   icat <= iTC
  R4   iTC[m](X) <= icat(X^m)           (needs X^m declared)
  R5   iTC[m] <= iTC[m+1]
  R6   topological group: iTC = icat, and iTC[m+1](X) <= icat(X^m)
  R7   degree-k covering E -> X: icat(X) <= k(icat(E)+1)-1,
       iTC[m](X) <= k m (iTC[m](E)+1) - 1
  R8   wedge/product: icat and iTC[m] of each factor bound the compound
       from below
  R9   homotopy equivalence transports every interval both ways
  R10  contractible <=> icat = 0 <=> iTC[m] = 0; positive cohomology
       (any field) certifies non-contractibility, hence lower bound 1
  R11  cl[F] >= 2 for F in {Q, R}  =>  icat >= 2
  R12  zcl[2,F] >= 2 for F in {Q, R}  =>  iTC >= 2
  R13  H+[F] for F in {Q, R}  =>  iTC[m] >= 2 for every m >= 3
  R14  cl[F] <= dcat and zcl[2,F] <= dTC for F in {Q, R}
  R15  cl[F] <= cat and zcl[m,F] <= TC[m] for every coefficient field
  R16  dcat(X^{m-1}) <= dTC[m](X)   (external companion result; on by
       default, traces are marked "external", disable with use_r16=False)

Computed rational results double as real ones (finite complexes have the
same rational and real cup data), which is why the Q-field facts feed the
rules stated for {Q, R}; reports label them "Q (= R)".
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, replace
from functools import cached_property

from .errors import BudgetError, ContradictionError, DomainError

INF = float("inf")
MAX_FINITE = 64


# ---------------------------------------------------------------------------
# Invariant keys
# ---------------------------------------------------------------------------

PLAIN = ("cat", "dcat", "icat")
SEQUENTIAL = ("TC", "dTC", "iTC")


def inv_cat():
    return ("cat",)


def inv_iTC(m):
    return ("iTC", m)


def parse_invariant(text: str) -> tuple:
    s = text.strip()
    m = re.fullmatch(r"(cat|dcat|icat)", s)
    if m:
        return (m.group(1),)
    m = re.fullmatch(r"(TC|dTC|iTC)(?:\[(\d+)\])?", s)
    if m:
        return (m.group(1), int(m.group(2) or 2))
    m = re.fullmatch(r"cl\[([^\]]+)\]", s)
    if m:
        return ("cl", m.group(1))
    m = re.fullmatch(r"zcl\[(\d+),\s*([^\]]+)\]", s)
    if m:
        return ("zcl", int(m.group(1)), m.group(2))
    m = re.fullmatch(r"H\+\[([^\]]+)\]", s)
    if m:
        return ("H+", m.group(1))
    raise DomainError(f"unknown invariant {text!r}")


def format_invariant(key: tuple) -> str:
    kind = key[0]
    if kind in PLAIN:
        return kind
    if kind in SEQUENTIAL:
        return kind if key[1] == 2 else f"{kind}[{key[1]}]"
    if kind == "cl":
        return f"cl[{key[1]}]"
    if kind == "zcl":
        return f"zcl[{key[1]},{key[2]}]"
    if kind == "H+":
        return f"H+[{key[1]}]"
    raise DomainError(f"bad invariant key {key!r}")


def _inv_sort_key(key: tuple):
    order = {"cat": 0, "dcat": 1, "icat": 2, "TC": 3, "dTC": 4, "iTC": 5,
             "cl": 6, "zcl": 7, "H+": 8}
    return (order[key[0]],) + tuple(str(k) for k in key[1:])


# ---------------------------------------------------------------------------
# Spaces, traces, bounds
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SpaceRef:
    name: str
    contractible: bool | None = None
    topological_group: bool = False
    homotopy_equivalent: tuple = ()
    product_of: tuple = ()
    wedge_of: tuple = ()
    power_of: tuple = ()    # (base, exponent)
    covered_by: tuple = ()  # (total space, degree)


@dataclass(frozen=True)
class TraceNode:
    space: str
    inv: tuple
    side: str  # "lo" | "hi"
    value: object  # int or INF
    kind: str  # "axiom" | "computed" | "attribute" | "trivial" | "rule"
    label: str  # citation, computation description, or rule id
    premises: tuple = ()
    detail: tuple = ()  # extra numeric inputs for replay, e.g. (("k", 3),)
    external: bool = False

    @cached_property
    def size(self) -> int:
        own = 1 if self.kind == "rule" else 0
        return own + sum(p.size for p in self.premises)

    def render(self, indent: int = 0) -> str:
        mark = " [external]" if self.external else ""
        head = (
            f"{'  ' * indent}{self.space}: {format_invariant(self.inv)}.{self.side} "
            f"{'>=' if self.side == 'lo' else '<='} {fmt_value(self.value)}"
            f"  ({self.kind}: {self.label}{mark})"
        )
        return "\n".join([head] + [p.render(indent + 1) for p in self.premises])


def fmt_value(v) -> str:
    return "inf" if v == INF else str(int(v))


def fmt_interval(lo, hi) -> str:
    if hi == INF:
        return f">= {fmt_value(lo)}"
    if lo == hi:
        return f"= {fmt_value(lo)}"
    return f"[{fmt_value(lo)}, {fmt_value(hi)}]"


class _Bound:
    __slots__ = ("lo", "lo_node", "hi", "hi_node")

    def __init__(self, space, inv):
        self.lo = 0
        self.lo_node = TraceNode(space, inv, "lo", 0, "trivial", "trivial lower bound")
        self.hi = INF
        self.hi_node = TraceNode(space, inv, "hi", INF, "trivial", "no upper bound")


@dataclass(frozen=True)
class Proposal:
    space: str
    inv: tuple
    side: str
    value: object
    kind: str
    label: str
    premises: tuple = ()
    detail: tuple = ()
    external: bool = False


class FactBase:
    """Interval store plus the monotone rule sweep."""

    def __init__(self, m_range=(2, 3, 4, 5), use_r16: bool = True,
                 sweep_budget: int = 10_000):
        self.spaces: dict[str, SpaceRef] = {}
        self.bounds: dict[tuple, _Bound] = {}
        self.m_range = tuple(m_range)
        self.use_r16 = use_r16
        self.sweep_budget = sweep_budget
        self._propagated = False

    # -- space declarations --------------------------------------------------
    def declare_space(self, ref: SpaceRef) -> None:
        cur = self.spaces.get(ref.name)
        if cur is not None and cur != ref:
            merged = SpaceRef(
                name=ref.name,
                contractible=ref.contractible if ref.contractible is not None else cur.contractible,
                topological_group=cur.topological_group or ref.topological_group,
                homotopy_equivalent=tuple(sorted(set(cur.homotopy_equivalent)
                                                 | set(ref.homotopy_equivalent))),
                product_of=ref.product_of or cur.product_of,
                wedge_of=ref.wedge_of or cur.wedge_of,
                power_of=ref.power_of or cur.power_of,
                covered_by=ref.covered_by or cur.covered_by,
            )
            self.spaces[ref.name] = merged
        else:
            self.spaces[ref.name] = ref
        self._check_relation_cycles()

    def ensure_space(self, name: str) -> SpaceRef:
        if name not in self.spaces:
            self.spaces[name] = SpaceRef(name)
        return self.spaces[name]

    def _check_relation_cycles(self) -> None:
        for kind in ("power_of", "covered_by"):
            for start in self.spaces:
                seen = {start}
                cur = start
                while True:
                    rel = getattr(self.spaces.get(cur, SpaceRef(cur)), kind)
                    if not rel:
                        break
                    cur = rel[0]
                    if cur in seen:
                        raise DomainError(f"cyclic {kind} relation through {start!r}")
                    seen.add(cur)

    # -- bound access ---------------------------------------------------------
    def _bound(self, space: str, inv: tuple) -> _Bound:
        key = (space, inv)
        if key not in self.bounds:
            self.bounds[key] = _Bound(space, inv)
        return self.bounds[key]

    def peek(self, space: str, inv: tuple):
        b = self.bounds.get((space, inv))
        return (b.lo, b.hi) if b else (0, INF)

    def interval(self, space: str, inv: tuple):
        if space not in self.spaces:
            raise DomainError(f"unknown space {space!r}")
        return self.peek(space, inv)

    # -- assertion ------------------------------------------------------------
    def assert_fact(self, space: str, inv: tuple, lo, hi, kind: str, label: str) -> None:
        if kind == "axiom" and not str(label).strip():
            raise DomainError("axioms must carry a citation label")
        if kind not in ("axiom", "computed"):
            raise DomainError(f"facts enter as axiom or computed, not {kind!r}")
        lo = int(lo)
        hi = INF if hi == INF else int(hi)
        if lo > (hi if hi != INF else MAX_FINITE + 1) or lo < 0:
            raise DomainError(f"bad interval [{lo}, {fmt_value(hi)}]")
        self.ensure_space(space)
        self._apply(Proposal(space, inv, "lo", lo, kind, label))
        if hi != INF:
            self._apply(Proposal(space, inv, "hi", hi, kind, label))
        self._propagated = False

    def _apply(self, p: Proposal) -> bool:
        if p.side == "lo" and p.value != INF and p.value > MAX_FINITE:
            p = replace(p, value=MAX_FINITE)  # keep the configured lattice finite
        b = self._bound(p.space, p.inv)
        node = TraceNode(p.space, p.inv, p.side, p.value, p.kind, p.label,
                         tuple(p.premises), tuple(p.detail), p.external)
        if p.side == "lo":
            if p.value > b.hi:
                raise ContradictionError(
                    f"{p.space} {format_invariant(p.inv)}: lower bound "
                    f"{fmt_value(p.value)} ({p.label}) exceeds upper bound "
                    f"{fmt_value(b.hi)} ({b.hi_node.label})"
                )
            if p.value > b.lo:
                b.lo, b.lo_node = p.value, node
                return True
            if p.value == b.lo and node.size < b.lo_node.size:
                b.lo_node = node
                return True
            return False
        if p.value < b.lo:
            raise ContradictionError(
                f"{p.space} {format_invariant(p.inv)}: upper bound "
                f"{fmt_value(p.value)} ({p.label}) is below lower bound "
                f"{fmt_value(b.lo)} ({b.lo_node.label})"
            )
        if p.value < b.hi:
            b.hi, b.hi_node = p.value, node
            return True
        if p.value == b.hi and node.size < b.hi_node.size:
            b.hi_node = node
            return True
        return False

    # -- propagation ----------------------------------------------------------
    def propagate(self) -> int:
        changes = 0
        for sweep in range(self.sweep_budget):
            changed = False
            for rule in _RULES:
                for proposal in rule(self):
                    if self._apply(proposal):
                        changed = True
                        changes += 1
            if not changed:
                self._propagated = True
                return changes
        raise BudgetError(f"propagation did not settle in {self.sweep_budget} sweeps")

    def derive(self, space: str, inv: tuple):
        if space not in self.spaces:
            raise DomainError(f"unknown space {space!r}")
        if not self._propagated:
            self.propagate()
        b = self._bound(space, inv)
        return b.lo, b.hi, b.lo_node, b.hi_node

    # -- helpers used by rules ------------------------------------------------
    def _lo(self, space, inv):
        b = self.bounds.get((space, inv))
        return (b.lo, b.lo_node) if b else (0, None)

    def _hi(self, space, inv):
        b = self.bounds.get((space, inv))
        return (b.hi, b.hi_node) if b else (INF, None)

    def _attr_node(self, space: str, attr: str) -> TraceNode:
        return TraceNode(space, ("attr",), "lo", 1, "attribute",
                         f"{space} declared {attr}")

    def known_invariants(self, space: str):
        return sorted((inv for (s, inv) in self.bounds if s == space),
                      key=_inv_sort_key)

    def report_rows(self):
        rows = []
        for name in sorted(self.spaces):
            for inv in self.known_invariants(name):
                b = self.bounds[(name, inv)]
                if b.lo == 0 and b.hi == INF:
                    continue
                rows.append((name, format_invariant(inv), fmt_interval(b.lo, b.hi),
                             b.lo_node, b.hi_node))
        return rows


# ---------------------------------------------------------------------------
# Rule implementations
# ---------------------------------------------------------------------------

def rule_r1(base: FactBase):
    for name in list(base.spaces):
        for m in base.m_range:
            seq = (("iTC", m), ("dTC", m), ("TC", m))
            for small, big in zip(seq, seq[1:]):
                hi, hnode = base._hi(name, big)
                if hi != INF:
                    yield Proposal(name, small, "hi", hi, "rule", "R1", (hnode,))
                lo, lnode = base._lo(name, small)
                if lo > 0:
                    yield Proposal(name, big, "lo", lo, "rule", "R1", (lnode,))


def rule_r2(base: FactBase):
    seq = (("icat",), ("dcat",), ("cat",))
    for name in list(base.spaces):
        for small, big in zip(seq, seq[1:]):
            hi, hnode = base._hi(name, big)
            if hi != INF:
                yield Proposal(name, small, "hi", hi, "rule", "R2", (hnode,))
            lo, lnode = base._lo(name, small)
            if lo > 0:
                yield Proposal(name, big, "lo", lo, "rule", "R2", (lnode,))


def rule_r3(base: FactBase):
    for name in list(base.spaces):
        hi, hnode = base._hi(name, ("iTC", 2))
        if hi != INF:
            yield Proposal(name, ("icat",), "hi", hi, "rule", "R3", (hnode,))
        lo, lnode = base._lo(name, ("icat",))
        if lo > 0:
            yield Proposal(name, ("iTC", 2), "lo", lo, "rule", "R3", (lnode,))


def _powers_of(base: FactBase, name: str):
    for ref in base.spaces.values():
        if ref.power_of and ref.power_of[0] == name:
            yield ref.name, ref.power_of[1]


def rule_r4(base: FactBase):
    for name in list(base.spaces):
        for power, m in _powers_of(base, name):
            if m not in base.m_range:
                continue
            hi, hnode = base._hi(power, ("icat",))
            if hi != INF:
                yield Proposal(name, ("iTC", m), "hi", hi, "rule", "R4", (hnode,))
            lo, lnode = base._lo(name, ("iTC", m))
            if lo > 0:
                yield Proposal(power, ("icat",), "lo", lo, "rule", "R4", (lnode,))


def rule_r5(base: FactBase):
    for name in list(base.spaces):
        for m in base.m_range:
            if m + 1 not in base.m_range:
                continue
            hi, hnode = base._hi(name, ("iTC", m + 1))
            if hi != INF:
                yield Proposal(name, ("iTC", m), "hi", hi, "rule", "R5", (hnode,))
            lo, lnode = base._lo(name, ("iTC", m))
            if lo > 0:
                yield Proposal(name, ("iTC", m + 1), "lo", lo, "rule", "R5", (lnode,))


def rule_r6(base: FactBase):
    for name, ref in list(base.spaces.items()):
        if not ref.topological_group:
            continue
        attr = base._attr_node(name, "a path-connected topological group")
        # equality iTC = icat: both bounds cross both ways
        for src, dst in ((("iTC", 2), ("icat",)), (("icat",), ("iTC", 2))):
            hi, hnode = base._hi(name, src)
            if hi != INF:
                yield Proposal(name, dst, "hi", hi, "rule", "R6", (hnode, attr))
            lo, lnode = base._lo(name, src)
            if lo > 0:
                yield Proposal(name, dst, "lo", lo, "rule", "R6", (lnode, attr))
        for power, m in _powers_of(base, name):
            if m + 1 not in base.m_range:
                continue
            hi, hnode = base._hi(power, ("icat",))
            if hi != INF:
                yield Proposal(name, ("iTC", m + 1), "hi", hi, "rule", "R6",
                               (hnode, attr))
            lo, lnode = base._lo(name, ("iTC", m + 1))
            if lo > 0:
                yield Proposal(power, ("icat",), "lo", lo, "rule", "R6",
                               (lnode, attr))


def rule_r7(base: FactBase):
    for name, ref in list(base.spaces.items()):
        if not ref.covered_by:
            continue
        total, k = ref.covered_by
        attr = base._attr_node(name, f"covered by {total} with degree {k}")
        hi, hnode = base._hi(total, ("icat",))
        if hi != INF:
            yield Proposal(name, ("icat",), "hi", k * (hi + 1) - 1, "rule", "R7",
                           (hnode, attr), detail=(("k", k),))
        for m in base.m_range:
            hi, hnode = base._hi(total, ("iTC", m))
            if hi != INF:
                yield Proposal(name, ("iTC", m), "hi", k * m * (hi + 1) - 1,
                               "rule", "R7", (hnode, attr),
                               detail=(("k", k), ("m", m)))


def rule_r8(base: FactBase):
    for name, ref in list(base.spaces.items()):
        parts = tuple(ref.wedge_of) + tuple(ref.product_of)
        how = "wedge" if ref.wedge_of else "product"
        for part in parts:
            attr = base._attr_node(name, f"{how} containing {part}")
            lo, lnode = base._lo(part, ("icat",))
            if lo > 0:
                yield Proposal(name, ("icat",), "lo", lo, "rule", "R8",
                               (lnode, attr))
            for m in base.m_range:
                lo, lnode = base._lo(part, ("iTC", m))
                if lo > 0:
                    yield Proposal(name, ("iTC", m), "lo", lo, "rule", "R8",
                                   (lnode, attr))


def rule_r9(base: FactBase):
    pairs = set()
    for name, ref in base.spaces.items():
        for other in ref.homotopy_equivalent:
            pairs.add((name, other))
            pairs.add((other, name))
    for src, dst in sorted(pairs):
        if src not in base.spaces or dst not in base.spaces:
            continue
        attr = base._attr_node(src, f"homotopy equivalent to {dst}")
        for inv in base.known_invariants(src):
            lo, lnode = base._lo(src, inv)
            if lo > 0:
                yield Proposal(dst, inv, "lo", lo, "rule", "R9", (lnode, attr))
            hi, hnode = base._hi(src, inv)
            if hi != INF:
                yield Proposal(dst, inv, "hi", hi, "rule", "R9", (hnode, attr))


def _intertwining_invariants(base: FactBase):
    yield ("icat",)
    for m in base.m_range:
        yield ("iTC", m)


def rule_r10(base: FactBase):
    for name, ref in list(base.spaces.items()):
        if ref.contractible is True:
            attr = base._attr_node(name, "contractible")
            for inv in _intertwining_invariants(base):
                yield Proposal(name, inv, "hi", 0, "rule", "R10", (attr,))
                yield Proposal(name, inv, "lo", 0, "rule", "R10", (attr,))
        # icat = 0 or iTC[m] = 0 collapses all the others to 0
        zero_node = None
        for inv in _intertwining_invariants(base):
            hi, hnode = base._hi(name, inv)
            if hi == 0:
                zero_node = hnode
                break
        if zero_node is not None:
            for inv in _intertwining_invariants(base):
                yield Proposal(name, inv, "hi", 0, "rule", "R10", (zero_node,))
        # positive cohomology in any coefficients rules contractibility out
        witness = None
        if ref.contractible is False:
            witness = base._attr_node(name, "non-contractible")
        else:
            for (s, inv) in base.bounds:
                if s == name and inv[0] == "H+":
                    lo, lnode = base._lo(name, inv)
                    if lo >= 1:
                        witness = lnode
                        break
        if witness is not None:
            for inv in _intertwining_invariants(base):
                yield Proposal(name, inv, "lo", 1, "rule", "R10", (witness,))


_REAL_LIKE = ("Q", "R")


def rule_r11(base: FactBase):
    for name in list(base.spaces):
        for f in _REAL_LIKE:
            lo, lnode = base._lo(name, ("cl", f))
            if lo >= 2:
                yield Proposal(name, ("icat",), "lo", 2, "rule", "R11", (lnode,))


def rule_r12(base: FactBase):
    for name in list(base.spaces):
        for f in _REAL_LIKE:
            lo, lnode = base._lo(name, ("zcl", 2, f))
            if lo >= 2:
                yield Proposal(name, ("iTC", 2), "lo", 2, "rule", "R12", (lnode,))


def rule_r13(base: FactBase):
    for name in list(base.spaces):
        for f in _REAL_LIKE:
            lo, lnode = base._lo(name, ("H+", f))
            if lo >= 1:
                for m in base.m_range:
                    if m >= 3:
                        yield Proposal(name, ("iTC", m), "lo", 2, "rule", "R13",
                                       (lnode,), detail=(("m", m),))


def rule_r14(base: FactBase):
    for name in list(base.spaces):
        for f in _REAL_LIKE:
            lo, lnode = base._lo(name, ("cl", f))
            if lo > 0:
                yield Proposal(name, ("dcat",), "lo", lo, "rule", "R14", (lnode,))
            lo, lnode = base._lo(name, ("zcl", 2, f))
            if lo > 0:
                yield Proposal(name, ("dTC", 2), "lo", lo, "rule", "R14", (lnode,))


def rule_r15(base: FactBase):
    for (name, inv) in list(base.bounds):
        if inv[0] == "cl":
            lo, lnode = base._lo(name, inv)
            if lo > 0:
                yield Proposal(name, ("cat",), "lo", lo, "rule", "R15", (lnode,))
        elif inv[0] == "zcl":
            lo, lnode = base._lo(name, inv)
            if lo > 0:
                yield Proposal(name, ("TC", inv[1]), "lo", lo, "rule", "R15",
                               (lnode,))


def rule_r16(base: FactBase):
    if not base.use_r16:
        return
    for name in list(base.spaces):
        for power, k in _powers_of(base, name):
            m = k + 1
            if m not in base.m_range:
                continue
            lo, lnode = base._lo(power, ("dcat",))
            if lo > 0:
                yield Proposal(name, ("dTC", m), "lo", lo, "rule", "R16",
                               (lnode,), detail=(("m", m),), external=True)


_RULES = (
    rule_r1, rule_r2, rule_r3, rule_r4, rule_r5, rule_r6, rule_r7, rule_r8,
    rule_r9, rule_r10, rule_r11, rule_r12, rule_r13, rule_r14, rule_r15,
    rule_r16,
)


# ---------------------------------------------------------------------------
# Trace replay (soundness audit)
# ---------------------------------------------------------------------------

def replay_trace(node: TraceNode) -> None:
    """Recompute every rule application in a trace from its leaves."""
    for p in node.premises:
        replay_trace(p)
    if node.kind != "rule":
        return
    detail = dict(node.detail)
    values = [p.value for p in node.premises if p.kind != "attribute"]
    rid = node.label
    if rid in ("R1", "R2", "R3", "R4", "R5", "R6", "R8", "R9", "R14", "R15"):
        expected = values[0]
    elif rid == "R7":
        k = detail["k"]
        expected = k * detail.get("m", 1) * (values[0] + 1) - 1
    elif rid == "R10":
        expected = node.value  # constant 0 or 1 backed by its witness premise
        if node.value not in (0, 1):
            raise ContradictionError(f"R10 produced {node.value}")
    elif rid in ("R11", "R12"):
        if values[0] < 2:
            raise ContradictionError(f"{rid} fired without its hypothesis")
        expected = 2
    elif rid == "R13":
        if values[0] < 1 or detail["m"] < 3:
            raise ContradictionError("R13 fired without its hypothesis")
        expected = 2
    elif rid == "R16":
        expected = values[0]
    else:
        raise ContradictionError(f"unknown rule id {rid!r} in trace")
    if expected != node.value:
        raise ContradictionError(
            f"{rid} replay mismatch: recomputed {expected}, trace has {node.value}"
        )


# ---------------------------------------------------------------------------
# Facts file format
# ---------------------------------------------------------------------------

def load_facts(base: FactBase, path) -> None:
    """Read @space declarations and 'space ; inv ; lo ; hi ; citation' lines."""
    with open(path) as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            try:
                if line.startswith("@space"):
                    _load_space_line(base, line)
                else:
                    parts = [p.strip() for p in line.split(";", 4)]
                    if len(parts) != 5:
                        raise DomainError("expected 'space ; invariant ; lo ; hi ; citation'")
                    name, inv_s, lo_s, hi_s, citation = parts
                    inv = parse_invariant(inv_s)
                    hi = INF if hi_s.lower() in ("inf", "oo") else int(hi_s)
                    base.assert_fact(name, inv, int(lo_s), hi, "axiom", citation)
            except (DomainError, ValueError) as exc:
                raise DomainError(f"{path}:{lineno}: {exc}") from exc


def _load_space_line(base: FactBase, line: str) -> None:
    tokens = line.split()
    if len(tokens) < 3:
        raise DomainError("@space needs a name and an attribute")
    _tag, name, attr, *args = tokens
    ref = base.ensure_space(name)
    if attr == "contractible":
        ref = replace(ref, contractible=True)
    elif attr == "non_contractible":
        ref = replace(ref, contractible=False)
    elif attr == "topological_group":
        ref = replace(ref, topological_group=True)
    elif attr == "homotopy_equivalent":
        ref = replace(ref, homotopy_equivalent=ref.homotopy_equivalent + tuple(args))
    elif attr == "power_of":
        ref = replace(ref, power_of=(args[0], int(args[1])))
    elif attr == "covered_by":
        ref = replace(ref, covered_by=(args[0], int(args[1])))
    elif attr == "wedge_of":
        ref = replace(ref, wedge_of=tuple(args))
    elif attr == "product_of":
        ref = replace(ref, product_of=tuple(args))
    else:
        raise DomainError(f"unknown @space attribute {attr!r}")
    base.spaces[name] = ref
    base._check_relation_cycles()


def save_facts_report(base: FactBase, path) -> None:
    rows = [
        {"space": s, "invariant": i, "interval": iv}
        for s, i, iv, _l, _h in base.report_rows()
    ]
    with open(path, "w") as fh:
        json.dump(rows, fh, indent=1, sort_keys=True)
        fh.write("\n")
