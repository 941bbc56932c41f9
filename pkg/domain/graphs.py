#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Grafos finitos simples: representação, construtores e combinadores.

Os vértices são inteiros densos 0..n-1; nomes são apenas cosméticos.
Junção e união disjunta reindexam o segundo operando com deslocamento
|V(primeiro)|.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional, Sequence, Tuple

import networkx as nx

from domain.exceptions import InvalidInputError

logger = logging.getLogger(__name__)

Edge = Tuple[int, int]


@dataclass(frozen=True)
class Graph:
    """Grafo finito simples com adjacência simétrica e irreflexiva."""

    n: int
    adjacency: Tuple[FrozenSet[int], ...]
    names: Optional[Tuple[str, ...]] = field(default=None, compare=False)

    def __post_init__(self):
        if self.n < 0:
            raise InvalidInputError(f"Ordem negativa: {self.n}")
        if len(self.adjacency) != self.n:
            raise InvalidInputError("Lista de adjacência com tamanho diferente da ordem")
        if self.names is not None and len(self.names) != self.n:
            raise InvalidInputError("Lista de nomes com tamanho diferente da ordem")
        for u, neighbours in enumerate(self.adjacency):
            for v in neighbours:
                if not 0 <= v < self.n:
                    raise InvalidInputError(f"Vizinho fora do intervalo: {u} -> {v}")
                if v == u:
                    raise InvalidInputError(f"Laço no vértice {u}")
                if u not in self.adjacency[v]:
                    raise InvalidInputError(f"Adjacência assimétrica: {u} -> {v}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Edge], names: Optional[Sequence[str]] = None) -> "Graph":
        """Constrói um grafo a partir de uma lista de arestas."""
        adjacency: List[set] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidInputError(f"Aresta fora do intervalo: ({u}, {v})")
            if u == v:
                raise InvalidInputError(f"Laço no vértice {u}")
            adjacency[u].add(v)
            adjacency[v].add(u)
        return cls(n, tuple(frozenset(a) for a in adjacency), tuple(names) if names is not None else None)

    def vertices(self) -> range:
        return range(self.n)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def neighbours(self, v: int) -> FrozenSet[int]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def edges(self) -> List[Edge]:
        """Arestas uma única vez, com u < v, ordenadas por (u, v)."""
        return sorted((u, v) for u in range(self.n) for v in self.adjacency[u] if u < v)

    @property
    def num_edges(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2

    def to_networkx(self) -> nx.Graph:
        nx_graph = nx.Graph()
        nx_graph.add_nodes_from(range(self.n))
        nx_graph.add_edges_from(self.edges())
        return nx_graph

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


@dataclass(frozen=True)
class VertexSubset:
    """Subconjunto ordenado de vértices de um grafo pai."""

    parent: Graph
    members: Tuple[int, ...]

    def __post_init__(self):
        seen = set()
        for v in self.members:
            if not 0 <= v < self.parent.n:
                raise InvalidInputError(f"Vértice {v} fora do grafo de ordem {self.parent.n}")
            if v in seen:
                raise InvalidInputError(f"Vértice repetido no subconjunto: {v}")
            seen.add(v)
        object.__setattr__(self, "members", tuple(sorted(self.members)))

    @classmethod
    def of(cls, parent: Graph, members: Iterable[int]) -> "VertexSubset":
        return cls(parent, tuple(members))

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, v: object) -> bool:
        return v in self.members


def make_empty(k: int) -> Graph:
    """Grafo sem arestas com k vértices."""
    return Graph.from_edges(k, [])


def make_path(k: int) -> Graph:
    """Caminho com k arestas (k + 1 vértices)."""
    if k < 0:
        raise InvalidInputError(f"Comprimento de caminho inválido: {k}")
    return Graph.from_edges(k + 1, [(i, i + 1) for i in range(k)])


def make_cycle(k: int) -> Graph:
    """Ciclo de comprimento k >= 3."""
    if k < 3:
        raise InvalidInputError(f"Ciclo precisa de comprimento >= 3, recebido {k}")
    return Graph.from_edges(k, [(i, (i + 1) % k) for i in range(k)])


def make_complete(k: int) -> Graph:
    """Grafo completo de ordem k."""
    if k < 0:
        raise InvalidInputError(f"Ordem inválida: {k}")
    return Graph.from_edges(k, [(u, v) for u in range(k) for v in range(u + 1, k)])


def _merged_names(x: Graph, y: Graph) -> Optional[Tuple[str, ...]]:
    if x.names is None and y.names is None:
        return None
    left = x.names or tuple(str(v) for v in x.vertices())
    right = y.names or tuple(str(v) for v in y.vertices())
    return left + right


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    """União disjunta; o vértice i de g2 passa a ter id |V(g1)| + i."""
    offset = g1.n
    edges = g1.edges() + [(u + offset, v + offset) for u, v in g2.edges()]
    return Graph.from_edges(g1.n + g2.n, edges, _merged_names(g1, g2))


def join(x: Graph, y: Graph) -> Graph:
    """Junção X ∨ Y: união disjunta mais todas as arestas cruzadas."""
    offset = x.n
    cross = [(u, offset + v) for u in x.vertices() for v in y.vertices()]
    edges = x.edges() + [(u + offset, v + offset) for u, v in y.edges()] + cross
    return Graph.from_edges(x.n + y.n, edges, _merged_names(x, y))


def induced_subgraph(g: Graph, s: VertexSubset) -> Tuple[Graph, Dict[int, int]]:
    """
    Subgrafo induzido por s.

    Returns:
        O subgrafo e o mapa de reindexação (vértice original -> novo id)
    """
    if s.parent != g:
        # Membros ainda precisam caber em g.
        VertexSubset(g, s.members)
    reindex = {v: i for i, v in enumerate(s.members)}
    edges = [(reindex[u], reindex[v]) for u, v in g.edges() if u in reindex and v in reindex]
    names = tuple(g.names[v] for v in s.members) if g.names is not None else None
    return Graph.from_edges(len(s.members), edges, names), reindex


def is_connected(g: Graph) -> bool:
    """Grafo conexo (o grafo vazio de ordem 0 não é considerado conexo)."""
    if g.n == 0:
        return False
    return nx.is_connected(g.to_networkx())


def are_isomorphic(g1: Graph, g2: Graph) -> bool:
    if g1.n != g2.n or g1.num_edges != g2.num_edges:
        return False
    return nx.is_isomorphic(g1.to_networkx(), g2.to_networkx())


def graph_from_shorthand(text: str) -> Graph:
    """
    Constrói um grafo a partir de uma forma curta: cycle:N, path:N, complete:N ou empty:N.
    """
    kind, _, raw = text.partition(":")
    builders = {"cycle": make_cycle, "path": make_path, "complete": make_complete, "empty": make_empty}
    if kind not in builders or not raw.strip().isdigit():
        raise InvalidInputError(f"Forma curta de grafo desconhecida: {text!r}")
    return builders[kind](int(raw))
