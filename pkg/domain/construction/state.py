#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Estado imutável da construção incremental: árvore B_t, estado dos pares e
pares bons processados com suas testemunhas de separação.
"""

from dataclasses import dataclass, field, replace
from math import isqrt
from typing import FrozenSet, Iterator, List, Tuple

from domain.construction.branch_spec import BranchSpec
from domain.exceptions import InvalidInputError
from domain.oracles import GraphOracle, WitnessBudget

Pair = Tuple[int, int]


def pair_enumeration(i: int) -> Pair:
    """
    i-ésimo par {a, b}, a < b, na ordem colex por (b, a), com i >= 1.

    {0,1}, {0,2}, {1,2}, {0,3}, ... O par {a, b} ocupa o índice b(b-1)/2 + a + 1.
    """
    if i < 1:
        raise InvalidInputError(f"Índice de par precisa ser >= 1, recebido {i}")
    k = i - 1
    b = (1 + isqrt(1 + 8 * k)) // 2
    while b * (b - 1) // 2 > k:
        b -= 1
    a = k - b * (b - 1) // 2
    return a, b


def pair_index(a: int, b: int) -> int:
    """Inverso de pair_enumeration."""
    a, b = min(a, b), max(a, b)
    if a == b or a < 0:
        raise InvalidInputError(f"Par inválido: ({a}, {b})")
    return b * (b - 1) // 2 + a + 1


@dataclass(frozen=True)
class Branch:
    """Ramo pendente: vértices do oráculo do vizinho da raiz até a ponta."""

    length: int
    vertices: Tuple[int, ...]


@dataclass(frozen=True)
class TsTree:
    root: int
    branches: Tuple[Branch, ...] = ()

    def vertices(self) -> List[int]:
        out = [self.root]
        for branch in self.branches:
            out.extend(branch.vertices)
        return out

    def lengths(self) -> List[int]:
        return [branch.length for branch in self.branches]

    def tree_edges(self) -> FrozenSet[Pair]:
        """Arestas esperadas: (raiz, início do ramo) e vértices consecutivos do ramo."""
        edges = set()
        for branch in self.branches:
            chain = (self.root,) + branch.vertices
            for u, v in zip(chain, chain[1:]):
                edges.add((min(u, v), max(u, v)))
        return frozenset(edges)

    def depths(self) -> dict:
        """Distância de cada vértice à raiz dentro da árvore."""
        depth = {self.root: 0}
        for branch in self.branches:
            for index, v in enumerate(branch.vertices, start=1):
                depth[v] = index
        return depth

    def add(self, *branches: Branch) -> "TsTree":
        return replace(self, branches=self.branches + tuple(branches))


@dataclass(frozen=True)
class PairStatus:
    """
    Padrão: par não processado e bom. Exceções finitas: vértices envenenados
    (todo par que os contém é ruim e processado) e pares bons processados.
    """

    poisoned: FrozenSet[int] = frozenset()
    processed_good: FrozenSet[Pair] = frozenset()

    def is_bad(self, pair: Pair) -> bool:
        return pair[0] in self.poisoned or pair[1] in self.poisoned

    def is_processed(self, pair: Pair) -> bool:
        return self.is_bad(pair) or (min(pair), max(pair)) in self.processed_good


@dataclass(frozen=True)
class GoodPair:
    x: int
    y: int
    witness: int

    @property
    def pair(self) -> Pair:
        return self.x, self.y


@dataclass(frozen=True)
class ConstructionState:
    """
    Estado no tempo t. Dono único; `step` devolve um novo estado e nunca
    altera o anterior.
    """

    oracle: GraphOracle = field(compare=False)
    spec: BranchSpec
    budget: WitnessBudget
    t: int
    tree: TsTree
    status: PairStatus
    good_pairs: Tuple[GoodPair, ...]
    cursor: int

    @property
    def b_vertices(self) -> List[int]:
        return self.tree.vertices()

    @property
    def a_vertices(self) -> List[int]:
        """Vértices dos pares bons processados (o lado A no tempo t)."""
        seen: List[int] = []
        for gp in self.good_pairs:
            for v in gp.pair:
                if v not in seen:
                    seen.append(v)
        return seen

    @property
    def used_lengths(self) -> FrozenSet[int]:
        return frozenset(self.tree.lengths())

    def with_budget(self, budget: WitnessBudget) -> "ConstructionState":
        """Mesmo estado com outro orçamento, para retomar uma execução esgotada."""
        return replace(self, budget=budget)

    def enumerated_pairs(self) -> Iterator[Tuple[int, Pair]]:
        for i in range(1, self.cursor + 1):
            yield i, pair_enumeration(i)
