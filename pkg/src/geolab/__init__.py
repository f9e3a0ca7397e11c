"""Self-intersection numbers of curves on the pair of pants and the punctured torus.

Closed curves are coded by cyclic words in the free group on a and b; the
number of self-intersections is read off from the boundary order of the lifts
of a curve, and a numeric Schottky model checks it independently.
"""

from ._jit import backend
from .chart import PeriodicWord, SurfaceKind, alphabet_order, compare, linked
from .errors import (
    BoundaryAmbiguityError,
    CapExceededError,
    ConfigInvalidError,
    GeolabError,
    NonPrimitiveError,
    WordParseError,
)
from .intersection import (
    PairClass,
    lifts_cyc,
    linked_pairs,
    pair_class,
    self_intersection,
    upper_bound,
)
from .systole import ClassRecord, SystoleRecord, enumerate_classes, sequence, verify, witness
from .words import CyclicWord, Letter, Word, canonical_class, cyclic_reduce, free_reduce, invert, is_primitive

__version__ = "0.1.0"

__all__ = [
    "BoundaryAmbiguityError",
    "CapExceededError",
    "ClassRecord",
    "ConfigInvalidError",
    "CyclicWord",
    "GeolabError",
    "Letter",
    "NonPrimitiveError",
    "PairClass",
    "PeriodicWord",
    "SurfaceKind",
    "SystoleRecord",
    "Word",
    "WordParseError",
    "alphabet_order",
    "backend",
    "canonical_class",
    "compare",
    "cyclic_reduce",
    "enumerate_classes",
    "free_reduce",
    "invert",
    "is_primitive",
    "lifts_cyc",
    "linked",
    "linked_pairs",
    "pair_class",
    "self_intersection",
    "sequence",
    "upper_bound",
    "verify",
    "witness",
]
