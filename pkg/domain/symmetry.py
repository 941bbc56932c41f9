#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Simetrias de grafos finitos: automorfismos, automorfismos que preservam
fibras, homomorfismos distintivos e os invariantes χ, D e χ_D.

Tudo em escala de mesa: os grupos são listados elemento a elemento, com um
limite configurável de ordem.
"""

import logging
from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

import networkx as nx

from domain.exceptions import GroupTooLarge, InvalidInputError, SizeMismatchError
from domain.graphs import Graph, is_connected, make_complete, make_cycle
from domain.homomorphisms import (
    VertexMap,
    compose,
    enumerate_homomorphisms,
    require_homomorphism,
)

logger = logging.getLogger(__name__)

DEFAULT_GROUP_CAP = 10 ** 6


@dataclass(frozen=True, order=True)
class Permutation:
    """Permutação de 0..n-1 dada pelo vetor de imagens."""

    image: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "image", tuple(self.image))
        if sorted(self.image) != list(range(len(self.image))):
            raise InvalidInputError(f"Vetor não é uma permutação: {self.image}")

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(n)))

    @property
    def n(self) -> int:
        return len(self.image)

    def __call__(self, v: int) -> int:
        return self.image[v]

    def __mul__(self, other: "Permutation") -> "Permutation":
        """Composição (self ∘ other)(v) = self(other(v))."""
        if self.n != other.n:
            raise SizeMismatchError("Permutações de tamanhos diferentes")
        return Permutation(tuple(self.image[w] for w in other.image))

    def inverse(self) -> "Permutation":
        inverse = [0] * self.n
        for v, w in enumerate(self.image):
            inverse[w] = v
        return Permutation(tuple(inverse))

    def is_identity(self) -> bool:
        return all(v == w for v, w in enumerate(self.image))

    def moved_points(self) -> List[int]:
        return [v for v, w in enumerate(self.image) if v != w]


@dataclass(frozen=True)
class PermGroup:
    """Grupo de permutações listado explicitamente (elementos ordenados)."""

    n: int
    elements: Tuple[Permutation, ...]

    def __post_init__(self):
        object.__setattr__(self, "elements", tuple(sorted(self.elements)))

    @property
    def order(self) -> int:
        return len(self.elements)

    def is_trivial(self) -> bool:
        return self.order == 1

    def __contains__(self, alpha: object) -> bool:
        return alpha in self._members

    def __iter__(self) -> Iterator[Permutation]:
        return iter(self.elements)

    @cached_property
    def _members(self) -> frozenset:
        return frozenset(self.elements)

    @cached_property
    def generators(self) -> Tuple[Permutation, ...]:
        """Sublista geradora gulosa: cada gerador é o menor elemento fora do fecho atual."""
        generators: List[Permutation] = []
        closure = {Permutation.identity(self.n)}
        for alpha in self.elements:
            if alpha in closure:
                continue
            generators.append(alpha)
            closure = _generated(generators, self.n)
        return tuple(generators)

    def is_closed(self) -> bool:
        """Contém a identidade e é fechado por composição e inversão."""
        members = self._members
        if Permutation.identity(self.n) not in members:
            return False
        for alpha in self.elements:
            if alpha.inverse() not in members:
                return False
            for beta in self.elements:
                if alpha * beta not in members:
                    return False
        return True


def _generated(generators: Sequence[Permutation], n: int) -> set:
    closure = {Permutation.identity(n)}
    frontier = list(closure)
    while frontier:
        alpha = frontier.pop()
        for gen in generators:
            product = gen * alpha
            if product not in closure:
                closure.add(product)
                frontier.append(product)
    return closure


@dataclass(frozen=True)
class DistinguishingCheck:
    """Resultado de is_distinguishing; `witness` é um automorfismo preservador não trivial."""

    ok: bool
    witness: Optional[Permutation] = None

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class NonCompositionWitness:
    """G -> H1 -> H2 com ambos distintivos e a composição não distintiva."""

    graph: Graph
    inner: VertexMap
    outer: VertexMap
    composite: VertexMap
    witness: Permutation


def _refine(g: Graph, colours: Sequence[int]) -> List[int]:
    """Refinamento de cores até estabilizar (classes invariantes por automorfismos)."""
    current = list(colours)
    while True:
        signatures = [
            (current[v], tuple(sorted(current[u] for u in g.neighbours(v)))) for v in g.vertices()
        ]
        relabel: Dict[tuple, int] = {}
        for sig in sorted(set(signatures)):
            relabel[sig] = len(relabel)
        refined = [relabel[sig] for sig in signatures]
        if len(set(refined)) == len(set(current)):
            return refined
        current = refined


def iter_automorphisms(g: Graph, colours: Optional[Sequence[int]] = None) -> Iterator[Permutation]:
    """
    Enumera, em ordem lexicográfica, os automorfismos de g que preservam `colours`.

    Backtracking nos vértices 0..n-1; um candidato precisa ter a mesma classe
    de refinamento e adjacência consistente com todos os vértices já mapeados.
    """
    if colours is not None and len(colours) != g.n:
        raise SizeMismatchError("Coloração com tamanho diferente da ordem do grafo")
    classes = _refine(g, colours if colours is not None else [0] * g.n)
    image: List[int] = [-1] * g.n
    used = [False] * g.n

    def consistent(v: int, w: int) -> bool:
        for u in range(v):
            if g.has_edge(u, v) != g.has_edge(image[u], w):
                return False
        return True

    def extend(v: int) -> Iterator[Permutation]:
        if v == g.n:
            yield Permutation(tuple(image))
            return
        for w in range(g.n):
            if used[w] or classes[w] != classes[v] or not consistent(v, w):
                continue
            image[v], used[w] = w, True
            yield from extend(v + 1)
            image[v], used[w] = -1, False

    yield from extend(0)


def first_nontrivial_automorphism(g: Graph, colours: Optional[Sequence[int]] = None) -> Optional[Permutation]:
    """Menor automorfismo não trivial (lexicográfico) que preserva as cores, ou None."""
    for alpha in iter_automorphisms(g, colours):
        if not alpha.is_identity():
            return alpha
    return None


def _collect(g: Graph, colours: Optional[Sequence[int]], cap: Optional[int]) -> PermGroup:
    cap = DEFAULT_GROUP_CAP if cap is None else cap
    elements: List[Permutation] = []
    for alpha in iter_automorphisms(g, colours):
        elements.append(alpha)
        if len(elements) > cap:
            logger.warning(f"Grupo de automorfismos excedeu o limite de {cap}")
            raise GroupTooLarge(cap)
    return PermGroup(g.n, tuple(elements))


def colour_preserving_group(g: Graph, colours: Sequence[int], cap: Optional[int] = None) -> PermGroup:
    """Automorfismos de g que preservam a coloração de vértices dada."""
    return _collect(g, colours, cap)


def is_automorphism(g: Graph, alpha: Permutation) -> bool:
    if alpha.n != g.n:
        return False
    return all(g.has_edge(alpha(u), alpha(v)) for u, v in g.edges())


def automorphism_group(g: Graph, cap: Optional[int] = None) -> PermGroup:
    """Aut(g) listado; levanta GroupTooLarge se a ordem exceder `cap`."""
    group = _collect(g, None, cap)
    for alpha in group.elements:
        if not is_automorphism(g, alpha):
            raise AssertionError(f"Permutação não preserva arestas: {alpha.image}")
    logger.debug(f"|Aut(G)| = {group.order} para grafo de ordem {g.n}")
    return group


def _preserves_fibres(alpha: Permutation, f: VertexMap) -> bool:
    for cell in f.fibres().nonempty():
        if {alpha(v) for v in cell} != set(cell):
            return False
    return True


def _fixes_map(alpha: Permutation, f: VertexMap) -> bool:
    return all(f.image[alpha(v)] == f.image[v] for v in range(alpha.n))


def is_preserving(alpha: Permutation, f: VertexMap) -> bool:
    """
    α é preservador relativo a f: estabiliza cada fibra f⁻¹(h).

    Calcula as duas formulações (fibras estabilizadas e f∘α = f) e exige que concordem.
    """
    if alpha.n != f.domain.n:
        raise SizeMismatchError(f"Permutação de tamanho {alpha.n} para domínio de ordem {f.domain.n}")
    by_fibres = _preserves_fibres(alpha, f)
    by_composition = _fixes_map(alpha, f)
    if by_fibres != by_composition:
        raise AssertionError("As duas formulações de preservação discordam")
    return by_composition


def preserving_subgroup(g: Graph, f: VertexMap, cap: Optional[int] = None) -> PermGroup:
    """Subgrupo {α ∈ Aut(g) : α preserva f}."""
    if f.domain != g:
        raise SizeMismatchError("O mapa não tem g como domínio")
    return _collect(g, f.image, cap)


def is_distinguishing(f: VertexMap) -> DistinguishingCheck:
    """f é distintivo: o único automorfismo preservador é a identidade."""
    require_homomorphism(f)
    witness = first_nontrivial_automorphism(f.domain, f.image)
    return DistinguishingCheck(witness is None, witness)


def find_distinguishing(g: Graph, h: Graph) -> Optional[VertexMap]:
    """Primeiro homomorfismo distintivo g -> h na ordem lexicográfica, ou None."""
    for f in enumerate_homomorphisms(g, h):
        if first_nontrivial_automorphism(g, f.image) is None:
            return f
    return None


def chromatic_number(g: Graph) -> int:
    """
    Número cromático exato por branch-and-bound estilo DSatur.

    O limite superior inicial vem da coloração gulosa; o inferior, da maior clique.
    """
    if g.n == 0:
        return 0
    if g.num_edges == 0:
        return 1
    nx_graph = g.to_networkx()
    greedy = nx.greedy_color(nx_graph, strategy="largest_first")
    best = max(greedy.values()) + 1
    lower = max(len(clique) for clique in nx.find_cliques(nx_graph))
    if best == lower:
        return best

    colour: Dict[int, int] = {}
    neighbour_colours: List[Dict[int, int]] = [dict() for _ in g.vertices()]

    def select() -> int:
        return max(
            (v for v in g.vertices() if v not in colour),
            key=lambda v: (len(neighbour_colours[v]), g.degree(v), -v),
        )

    def assign(v: int, c: int, delta: int) -> None:
        for u in g.neighbours(v):
            counts = neighbour_colours[u]
            counts[c] = counts.get(c, 0) + delta
            if counts[c] == 0:
                del counts[c]

    def search(used: int) -> None:
        nonlocal best
        if best == lower:
            return
        if len(colour) == g.n:
            best = min(best, used)
            logger.debug(f"Coloração com {used} cores encontrada")
            return
        v = select()
        for c in range(min(used + 1, best - 1)):
            if c in neighbour_colours[v]:
                continue
            colour[v] = c
            assign(v, c, +1)
            search(max(used, c + 1))
            assign(v, c, -1)
            del colour[v]

    search(0)
    return best


def _colourings(g: Graph, k: int, proper: bool) -> Iterator[Tuple[int, ...]]:
    """
    Colorações com no máximo k cores em forma de crescimento restrito.

    Renomear cores não altera a propriedade distintiva, então basta um
    representante por renomeação.
    """
    earlier = [[u for u in g.neighbours(v) if u < v] for v in g.vertices()]
    colours: List[int] = [-1] * g.n

    def extend(v: int, used: int) -> Iterator[Tuple[int, ...]]:
        if v == g.n:
            yield tuple(colours)
            return
        for c in range(min(used + 1, k)):
            if proper and any(colours[u] == c for u in earlier[v]):
                continue
            colours[v] = c
            yield from extend(v + 1, max(used, c + 1))
        colours[v] = -1

    yield from extend(0, 0)


def distinguishing_number(g: Graph, cap: Optional[int] = None) -> int:
    """D(g): menor n com uma n-coloração (não necessariamente própria) distintiva."""
    group = automorphism_group(g, cap)
    if group.is_trivial():
        return 1
    for k in range(2, g.n + 1):
        for colours in _colourings(g, k, proper=False):
            if first_nontrivial_automorphism(g, colours) is None:
                logger.debug(f"D(G) = {k} com coloração {colours}")
                return k
    return g.n


def distinguishing_chromatic_number(g: Graph, cap: Optional[int] = None) -> int:
    """χ_D(g): menor n com uma n-coloração própria distintiva."""
    automorphism_group(g, cap)
    if g.n == 0:
        return 0
    for k in range(max(1, chromatic_number(g)), g.n + 1):
        for colours in _colourings(g, k, proper=True):
            if first_nontrivial_automorphism(g, colours) is None:
                logger.debug(f"χ_D(G) = {k} com coloração {colours}")
                return k
    return g.n


def compose_with_automorphism(beta: Permutation, f: VertexMap) -> VertexMap:
    """β∘f para β ∈ Aut(H)."""
    if beta.n != f.codomain.n:
        raise SizeMismatchError("Automorfismo de tamanho diferente do contradomínio")
    return VertexMap(f.domain, f.codomain, tuple(beta(w) for w in f.image))


def _connected_candidates(max_order: int) -> Iterator[Graph]:
    """Grafos conexos do atlas do networkx (até 7 vértices) em ordem do atlas."""
    if max_order > 7:
        logger.warning(f"O atlas cobre até 7 vértices; limite {max_order} reduzido para 7")
    for nx_graph in nx.graph_atlas_g():
        order = nx_graph.number_of_nodes()
        if order == 0:
            continue
        if order > max_order:
            break
        g = Graph.from_edges(order, [tuple(e) for e in nx_graph.edges()])
        if is_connected(g):
            yield g


def non_composition_witness(
    max_order: int = 7,
    inner_target: Optional[Graph] = None,
    outer_target: Optional[Graph] = None,
) -> Optional[NonCompositionWitness]:
    """
    Procura G -> H1 -> H2 com os dois mapas distintivos e a composição não distintiva.

    Por padrão H1 = C5 e H2 = K3; G percorre grafos conexos com até
    `max_order` vértices. Retorna None se o orçamento não bastar.
    """
    h1 = inner_target if inner_target is not None else make_cycle(5)
    h2 = outer_target if outer_target is not None else make_complete(3)
    outers = [g for g in enumerate_homomorphisms(h1, h2) if is_distinguishing(g)]
    if not outers:
        return None
    for candidate in _connected_candidates(max_order):
        for f in enumerate_homomorphisms(candidate, h1):
            if not is_distinguishing(f):
                continue
            for g in outers:
                composite = compose(f, g)
                check = is_distinguishing(composite)
                if not check:
                    logger.info(
                        f"Testemunha de não composição com {candidate.n} vértices: f={f.image}, g={g.image}"
                    )
                    return NonCompositionWitness(candidate, f, g, composite, check.witness)
    logger.warning(f"Nenhuma testemunha com até {max_order} vértices")
    return None
