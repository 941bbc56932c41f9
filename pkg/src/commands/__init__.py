"""
Módulo de comandos para o CLI homdist.
"""

from .cec import cec_group
from .config import config_group
from .construct import construct_group, gs_group
from .lemma import lemma1_group
from .solve import aut_group, core_group, dist_group, fixation_cmd, graph_group, hom_group, invariant_cmd, unique_group

__all__ = [
    "aut_group",
    "cec_group",
    "config_group",
    "construct_group",
    "core_group",
    "dist_group",
    "fixation_cmd",
    "graph_group",
    "gs_group",
    "hom_group",
    "invariant_cmd",
    "lemma1_group",
    "unique_group",
]
