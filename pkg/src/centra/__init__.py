"""Finite loop toolkit for central (LC, RC and C) loops.

Loops are :class:`CayleyTable` objects on ``0..n-1``; permutations act on the
right and compose left to right.
"""
from .core import (
    CayleyTable,
    Permutation,
    PermSet,
    TopismTriple,
    compose,
    find_identity,
    format_cycles,
    format_table,
    inverse,
    is_quasigroup,
    left_translation,
    opposite,
    parse_cycles,
    parse_table,
    power,
    right_translation,
)
from .errors import (
    CentraError,
    ClosureOverflow,
    ElementOutOfRange,
    InternalInconsistency,
    LawViolation,
    MalformedCycle,
    MalformedInput,
    NotALoop,
    NotSharplyTransitive,
    OrderCapExceeded,
    OrderMismatch,
)

__version__ = "0.1.0"
