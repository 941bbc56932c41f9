"""
Construção incremental sobre oráculos: árvore T_s, partição em fluxo e o
prefixo g_s do homomorfismo distintivo em H ∨ K₂.
"""

from domain.construction.branch_spec import BranchSpec
from domain.construction.engine import init_construction, run, step
from domain.construction.prefix import (
    Label,
    PartialHom,
    gs_prefix,
    k2_fibre_shape,
    prefix_rigidity_check,
    window_graph,
)
from domain.construction.state import (
    Branch,
    ConstructionState,
    GoodPair,
    PairStatus,
    TsTree,
    pair_enumeration,
    pair_index,
)
from domain.construction.verify import build_ts_prefix, tree_with_lengths, verify_state

__all__ = [
    "BranchSpec",
    "Branch",
    "ConstructionState",
    "GoodPair",
    "Label",
    "PairStatus",
    "PartialHom",
    "TsTree",
    "build_ts_prefix",
    "gs_prefix",
    "init_construction",
    "k2_fibre_shape",
    "pair_enumeration",
    "pair_index",
    "prefix_rigidity_check",
    "run",
    "step",
    "tree_with_lengths",
    "verify_state",
    "window_graph",
]
