"""Certificate-game values and Boolean function complexity measures."""

from ._util import __version__
from .boolfn import PartialBooleanFunction, from_truth_table, load, parse_zoo, zoo
from .games import GameReport, cg_ns, cg_private_bounds, cg_pub, cg_pub_single_bit, cg_single_bit
from .linprog import LinearProgram, LpSolution, solve, solve_zero_sum
from .measures import MeasureReport

__all__ = [
    "__version__", "PartialBooleanFunction", "from_truth_table", "load", "parse_zoo", "zoo",
    "GameReport", "cg_ns", "cg_private_bounds", "cg_pub", "cg_pub_single_bit", "cg_single_bit",
    "LinearProgram", "LpSolution", "solve", "solve_zero_sum", "MeasureReport",
]
