"""Shared error types mapped to CLI exit codes."""


class DomainError(ValueError):
    """Invalid input object (complex, diagram, measure, facts file)."""


class BudgetError(RuntimeError):
    """A configured search or enumeration budget was exhausted."""


class ContradictionError(ValueError):
    """Two asserted facts have an empty interval intersection."""
