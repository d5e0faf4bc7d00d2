"""copnumlab: exact laboratory for the cops-and-robber game on small graphs."""

from .graph import Graph, Graph6Error, GraphError, from_graph6, to_graph6
from .patterns import CATALOG, Embedding, PawPartition, classify, find_induced, is_free, paw_partition
from .engine import (
    CopNumber,
    GameTrace,
    Outcome,
    StrategyContradiction,
    WinTable,
    cop_number,
    is_dismantlable,
    run_game,
    solve,
)

__all__ = [
    "Graph", "GraphError", "Graph6Error", "from_graph6", "to_graph6",
    "CATALOG", "Embedding", "PawPartition", "classify", "find_induced",
    "is_free", "paw_partition",
    "CopNumber", "GameTrace", "Outcome", "StrategyContradiction", "WinTable",
    "cop_number", "is_dismantlable", "run_game", "solve",
]

__version__ = "0.1.0"
