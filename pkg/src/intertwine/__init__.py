"""Exact-arithmetic toolkit for intertwining navigation invariants.

The package computes cohomological lower bounds (cup lengths and
zero-divisor cup lengths over exact fields), enumerates the resolvers of
branching diagrams, realizes explicit navigation constructions, and
propagates the invariant inequality network to derive intervals with
replayable proof traces.
"""

__version__ = "0.1.0"
