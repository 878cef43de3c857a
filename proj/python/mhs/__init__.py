"""Minimal hitting set enumeration."""

from ._mhs import (
    OracleLimitError,
    ParseError,
    ValidationError,
    algorithms,
    brute_force,
    check_duality,
    condense,
    enumerate,
    expand,
    is_hitting,
    matching_graph,
    minimize,
    random_family,
)

__all__ = [
    "OracleLimitError",
    "ParseError",
    "ValidationError",
    "algorithms",
    "brute_force",
    "check_duality",
    "condense",
    "enumerate",
    "expand",
    "is_hitting",
    "matching_graph",
    "minimize",
    "random_family",
]
