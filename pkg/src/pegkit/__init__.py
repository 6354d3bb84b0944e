"""Peg solitaire engine: boards, position classes, search, level sets.

The four supported boards are the 33-hole cross, the 37-hole cross with
corner fills, the 6x6 square, and the side-4 hexagon.  Positions are bit
sets over hole indices; the level machinery enumerates every position
solvable to a class's finishing holes, and the catalog layer turns those
sets into censuses and puzzles.
"""

from .boards import (
    BOARD_IDS,
    Board,
    GridParseError,
    IllegalJumpError,
    SymmetryType,
    make_board,
)
from .catalog import (
    Census,
    CensusRuleError,
    UniqueJumpRow,
    check_symmetric_class_rule,
    complement_pairs,
    export_puzzles,
    symmetry_census,
    sweep_third_turn,
    unique_jump_census,
)
from .levels import (
    LevelStore,
    StoreCorruptError,
    StoreTruncatedError,
    read_level,
    run,
    seeds,
    write_level,
)
from .parity import (
    class_families,
    class_vector,
    finishing_holes,
    label_counts,
    named_class,
    reachable_vectors,
    store_class_names,
    store_pattern,
)
from .solver import SearchBudgetError, Solution, Solver

__version__ = "0.1.0"

__all__ = [
    "BOARD_IDS",
    "Board",
    "Census",
    "CensusRuleError",
    "GridParseError",
    "IllegalJumpError",
    "LevelStore",
    "SearchBudgetError",
    "Solution",
    "Solver",
    "StoreCorruptError",
    "StoreTruncatedError",
    "SymmetryType",
    "UniqueJumpRow",
    "check_symmetric_class_rule",
    "class_families",
    "class_vector",
    "complement_pairs",
    "export_puzzles",
    "finishing_holes",
    "label_counts",
    "make_board",
    "named_class",
    "reachable_vectors",
    "read_level",
    "run",
    "seeds",
    "store_class_names",
    "store_pattern",
    "sweep_third_turn",
    "symmetry_census",
    "unique_jump_census",
    "write_level",
]
