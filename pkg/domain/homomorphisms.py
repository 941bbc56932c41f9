#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Homomorfismos de grafos: verificação, busca, enumeração, composição,
núcleos, coloração H única e fixação.
"""

import logging
from dataclasses import dataclass
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from domain.exceptions import (
    GraphMismatchError,
    InvalidInputError,
    NotAHomomorphismError,
)
from domain.graphs import Edge, Graph, VertexSubset, disjoint_union

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class VertexMap:
    """Mapa total de vértices domain -> codomain (candidato a homomorfismo)."""

    domain: Graph
    codomain: Graph
    image: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "image", tuple(self.image))
        if len(self.image) != self.domain.n:
            raise InvalidInputError(
                f"Mapa com {len(self.image)} imagens para domínio de ordem {self.domain.n}"
            )
        for v, w in enumerate(self.image):
            if not 0 <= w < self.codomain.n:
                raise InvalidInputError(f"Imagem inválida {v} -> {w}")

    @classmethod
    def identity(cls, g: Graph) -> "VertexMap":
        return cls(g, g, tuple(g.vertices()))

    def __call__(self, v: int) -> int:
        return self.image[v]

    def fibres(self) -> "FibrePartition":
        return FibrePartition.of(self)

    def is_injective(self) -> bool:
        return len(set(self.image)) == len(self.image)

    def is_surjective(self) -> bool:
        return len(set(self.image)) == self.codomain.n


@dataclass(frozen=True)
class FibrePartition:
    """Fibras f⁻¹(h) para cada vértice h do contradomínio (possivelmente vazias)."""

    cells: Tuple[Tuple[int, ...], ...]

    @classmethod
    def of(cls, f: VertexMap) -> "FibrePartition":
        cells: List[List[int]] = [[] for _ in range(f.codomain.n)]
        for v, w in enumerate(f.image):
            cells[w].append(v)
        return cls(tuple(tuple(c) for c in cells))

    def __getitem__(self, h: int) -> Tuple[int, ...]:
        return self.cells[h]

    def nonempty(self) -> List[Tuple[int, ...]]:
        return [c for c in self.cells if c]


@dataclass(frozen=True)
class HomomorphismCheck:
    """Resultado de is_homomorphism; avalia como bool."""

    ok: bool
    violating_edge: Optional[Edge] = None

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class Fixation:
    """Grafo G(f) e o mapa canônico f ∪ 1_H : G(f) -> H."""

    graph: Graph
    canonical_map: VertexMap


def is_homomorphism(f: VertexMap) -> HomomorphismCheck:
    """Verifica se toda aresta do domínio vai para uma aresta do contradomínio."""
    for u, v in f.domain.edges():
        if not f.codomain.has_edge(f.image[u], f.image[v]):
            return HomomorphismCheck(False, (u, v))
    return HomomorphismCheck(True)


def require_homomorphism(f: VertexMap) -> None:
    check = is_homomorphism(f)
    if not check:
        raise NotAHomomorphismError(
            f"O mapa não é um homomorfismo: a aresta {check.violating_edge} vai para uma não-aresta",
            check.violating_edge,
        )


def find_homomorphism(g: Graph, h: Graph) -> Optional[VertexMap]:
    """
    Busca completa por um homomorfismo g -> h.

    Backtracking sobre os vértices em ordem estática de grau decrescente;
    as imagens candidatas de um vértice ficam restritas pelos vizinhos já
    atribuídos. Retorna None quando não existe homomorfismo.
    """
    order = sorted(g.vertices(), key=lambda v: (-g.degree(v), v))
    position = {v: i for i, v in enumerate(order)}
    assigned_before = [
        [u for u in g.neighbours(v) if position[u] < position[v]] for v in order
    ]
    image: List[int] = [-1] * g.n

    def extend(i: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        for w in _candidates(h, image, assigned_before[i]):
            image[v] = w
            if extend(i + 1):
                return True
        image[v] = -1
        return False

    if not extend(0):
        logger.debug(f"Nenhum homomorfismo de ordem {g.n} para ordem {h.n}")
        return None
    return VertexMap(g, h, tuple(image))


def _candidates(h: Graph, image: Sequence[int], fixed_neighbours: Sequence[int]) -> List[int]:
    if not fixed_neighbours:
        return list(h.vertices())
    allowed = set(h.neighbours(image[fixed_neighbours[0]]))
    for u in fixed_neighbours[1:]:
        allowed &= h.neighbours(image[u])
    return sorted(allowed)


def enumerate_homomorphisms(g: Graph, h: Graph) -> Iterator[VertexMap]:
    """
    Enumera todos os homomorfismos g -> h em ordem lexicográfica do vetor de imagens.

    Os vértices são atribuídos na ordem 0..n-1, candidatos em ordem crescente.
    """
    earlier = [sorted(u for u in g.neighbours(v) if u < v) for v in g.vertices()]
    image: List[int] = [-1] * g.n

    def extend(v: int) -> Iterator[VertexMap]:
        if v == g.n:
            yield VertexMap(g, h, tuple(image))
            return
        for w in _candidates(h, image, earlier[v]):
            image[v] = w
            yield from extend(v + 1)
        image[v] = -1

    yield from extend(0)


def count_homomorphisms(g: Graph, h: Graph) -> int:
    return sum(1 for _ in enumerate_homomorphisms(g, h))


def compose(f: VertexMap, g: VertexMap) -> VertexMap:
    """Composição g∘f: G -> K, com imagem v -> g(f(v))."""
    if f.codomain != g.domain:
        raise GraphMismatchError("O contradomínio de f difere do domínio de g")
    return VertexMap(f.domain, g.codomain, tuple(g.image[w] for w in f.image))


def is_core(h: Graph) -> bool:
    """Todo endomorfismo de h é bijetivo (portanto um automorfismo)."""
    for endo in enumerate_homomorphisms(h, h):
        if not endo.is_injective():
            logger.debug(f"Endomorfismo não bijetivo encontrado: {endo.image}")
            return False
    return True


def is_uniquely_h_colourable(g: Graph, h: Graph, group_cap: Optional[int] = None) -> bool:
    """
    g é H-colorível, todo homomorfismo g -> h é sobrejetivo e todos estão
    numa única órbita de Aut(h) por pós-composição.
    """
    # Importação local: symmetry depende deste módulo.
    from domain.symmetry import automorphism_group

    homs = {f.image for f in enumerate_homomorphisms(g, h)}
    if not homs:
        return False
    if any(len(set(image)) != h.n for image in homs):
        return False
    first = min(homs)
    group = automorphism_group(h, cap=group_cap)
    orbit = {tuple(beta.image[w] for w in first) for beta in group.elements}
    return homs <= orbit


def fixation(g: Graph, f: VertexMap, h: Graph) -> Fixation:
    """
    Fixação G(f) de g por f relativa a h.

    Vértices de g em 0..|V(g)|-1, vértices de h em seguida; x de g é ligado a
    cada y de h com f(x)y ∈ E(h).
    """
    if f.domain != g or f.codomain != h:
        raise GraphMismatchError("O mapa não vai de g para h")
    require_homomorphism(f)
    offset = g.n
    edges = g.edges() + [(u + offset, v + offset) for u, v in h.edges()]
    edges += [(x, offset + y) for x in g.vertices() for y in h.neighbours(f.image[x])]
    graph = Graph.from_edges(g.n + h.n, edges)
    canonical = VertexMap(graph, h, f.image + tuple(h.vertices()))
    logger.debug(f"Fixação com {graph.n} vértices e {graph.num_edges} arestas")
    return Fixation(graph, canonical)


def restrict(f: VertexMap, s: VertexSubset) -> Dict[int, int]:
    """Restrição f↾S como registro parcial {vértice: imagem}."""
    if s.parent != f.domain:
        raise GraphMismatchError("O subconjunto não pertence ao domínio do mapa")
    return {v: f.image[v] for v in s.members}


def union_map(f1: VertexMap, f2: VertexMap) -> VertexMap:
    """f1 ∪ f2 sobre a união disjunta dos domínios, num contradomínio comum."""
    if f1.codomain != f2.codomain:
        raise GraphMismatchError("Os mapas precisam do mesmo contradomínio")
    union = disjoint_union(f1.domain, f2.domain)
    return VertexMap(union, f1.codomain, f1.image + f2.image)
