"""
Módulo de domínio do homdist.

Grafos finitos, homomorfismos, simetrias, oráculos enumeráveis e a
construção incremental sobre eles.
"""

from domain.exceptions import HomdistError
from domain.graphs import Graph, VertexSubset
from domain.homomorphisms import VertexMap
from domain.oracles import GraphOracle, WitnessBudget
from domain.symmetry import PermGroup, Permutation

__all__ = [
    "Graph",
    "GraphOracle",
    "HomdistError",
    "PermGroup",
    "Permutation",
    "VertexMap",
    "VertexSubset",
    "WitnessBudget",
]
