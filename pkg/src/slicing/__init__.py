"""
Forward and backward slicing of feature models
"""

from .query import Direction, Relation, SliceQuery, SliceResult
from .slicer import parent_slice, select_and, select_or, slice
from .oracle import oracle_slice

slice_model = slice

__all__ = [
    "Direction",
    "Relation",
    "SliceQuery",
    "SliceResult",
    "oracle_slice",
    "parent_slice",
    "select_and",
    "select_or",
    "slice",
    "slice_model",
]
