"""Back-and-forth relations and Scott complexities of colored linear orders."""
from .order import (
    EMPTY, CutDescriptor, OmegaWord, OrderExpr, Point, Shuffle, eta, normalize,
    points, render,
)
from .syntax import ParseError, parse_expr, parse_finite
from .engine import Bounds, Engine, Inconclusive, default_engine, equiv, leq, leq_tuples
from .scott import (
    ComplexityTag, RankReport, complexity_from_invariants, cover2, rank_report,
    scott_complexity,
)

__version__ = "0.1.0"
