#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Grafos enumeráveis preguiçosos sobre os naturais, dados por predicados de
adjacência decidíveis, e as primitivas de busca de testemunhas c.e.c.

As buscas percorrem os ids em ordem crescente até o orçamento e devolvem a
menor testemunha; esgotar o orçamento nunca certifica inexistência.
"""

import logging
from dataclasses import dataclass
from itertools import combinations
from typing import AbstractSet, Any, Dict, Iterable, List, Optional, Sequence, Set

import networkx as nx

from domain.exceptions import AdjacentEndpoints, InvalidInputError, SearchExhausted
from domain.graphs import Graph, is_connected, make_complete

logger = logging.getLogger(__name__)

_MASK64 = 0xFFFFFFFFFFFFFFFF
_SPOT_CHECK_PAIRS = 64
DEFAULT_CAP = 1_000_000


def _splitmix64(x: int) -> int:
    x = (x + 0x9E3779B97F4A7C15) & _MASK64
    x = ((x ^ (x >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    x = ((x ^ (x >> 27)) * 0x94D049BB133111EB) & _MASK64
    return x ^ (x >> 31)


def pair_hash(seed: int, a: int, b: int) -> int:
    """Hash chaveado de 64 bits de (min, max, seed); independe da ordem das consultas."""
    low, high = (a, b) if a < b else (b, a)
    h = _splitmix64(seed & _MASK64)
    h = _splitmix64(h ^ (low & _MASK64))
    return _splitmix64(h ^ (high & _MASK64))


@dataclass(frozen=True)
class WitnessBudget:
    """Maior id de vértice examinado numa busca de testemunha."""

    cap: int = DEFAULT_CAP

    def __post_init__(self):
        if self.cap < 1:
            raise InvalidInputError(f"Orçamento precisa ser >= 1, recebido {self.cap}")


class GraphOracle:
    """
    Grafo enumerável dado por um predicado de adjacência sobre os naturais.

    Subclasses implementam `_adjacent(u, v)` para u < v. Um mapa de cores
    opcional (`colour`) é um homomorfismo para o grafo finito `target`.
    """

    kind = "abstract"

    def __init__(self, seed: Optional[int] = None, target: Optional[Graph] = None):
        self.seed = seed
        self.target = target
        self._spot_check()

    def adjacent(self, u: int, v: int) -> bool:
        if u == v:
            return False
        return self._adjacent(u, v) if u < v else self._adjacent(v, u)

    def _adjacent(self, u: int, v: int) -> bool:
        raise NotImplementedError("Subclasses precisam implementar _adjacent")

    @property
    def has_colour_map(self) -> bool:
        return self.target is not None

    def colour(self, v: int) -> int:
        raise NotImplementedError(f"O oráculo {self.kind} não tem mapa de cores")

    def spec(self) -> Dict[str, Any]:
        """Documento JSON da especificação do oráculo."""
        raise NotImplementedError

    def _spot_check(self) -> None:
        for i in range(_SPOT_CHECK_PAIRS):
            u, v = i % 11, (7 * i + 3) % 29
            if self.adjacent(u, v) != self.adjacent(v, u) or self.adjacent(u, u):
                raise InvalidInputError(f"Predicado do oráculo {self.kind} não é simétrico/irreflexivo")
            if self.has_colour_map and self.adjacent(u, v):
                if not self.target.has_edge(self.colour(u), self.colour(v)):
                    raise InvalidInputError(f"Mapa de cores do oráculo {self.kind} viola ({u}, {v})")

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.spec()})"


class RadoOracle(GraphOracle):
    """Grafo de Rado pelo predicado BIT: para u < v, adjacentes sse o bit u de v é 1."""

    kind = "rado-bit"

    def _adjacent(self, u: int, v: int) -> bool:
        return (v >> u) & 1 == 1

    def spec(self) -> Dict[str, Any]:
        return {"kind": self.kind}


class _SeededOracle(GraphOracle):
    def __init__(self, seed: int, target: Graph, density_bits: int = 1):
        if density_bits < 1:
            raise InvalidInputError(f"density_bits precisa ser >= 1, recebido {density_bits}")
        self.density_bits = density_bits
        self._density_mask = (1 << density_bits) - 1
        super().__init__(seed=seed, target=target)

    def _coin(self, u: int, v: int) -> bool:
        return pair_hash(self.seed, u, v) & self._density_mask == 0

    def _extra_spec(self, spec: Dict[str, Any]) -> Dict[str, Any]:
        if self.density_bits != 1:
            spec["density_bits"] = self.density_bits
        return spec


class RandomBipartiteOracle(_SeededOracle):
    """Grafo bipartido aleatório: pares têm lado 0, ímpares lado 1; mapa de cores = paridade."""

    kind = "random-bipartite"

    def __init__(self, seed: int, density_bits: int = 1):
        super().__init__(seed, make_complete(2), density_bits)

    def _adjacent(self, u: int, v: int) -> bool:
        return (u ^ v) & 1 == 1 and self._coin(u, v)

    def colour(self, v: int) -> int:
        return v & 1

    def spec(self) -> Dict[str, Any]:
        return self._extra_spec({"kind": self.kind, "seed": self.seed})


class RandomHColourableOracle(_SeededOracle):
    """Grafo aleatório H-colorível: cor(n) = n mod |V(H)|, arestas só entre cores adjacentes."""

    kind = "random-h-colourable"

    def __init__(self, h: Graph, seed: int, density_bits: int = 1):
        if h.n < 2 or not is_connected(h):
            raise InvalidInputError("H precisa ser conexo e não trivial (|V(H)| >= 2)")
        super().__init__(seed, h, density_bits)

    def _adjacent(self, u: int, v: int) -> bool:
        return self.target.has_edge(self.colour(u), self.colour(v)) and self._coin(u, v)

    def colour(self, v: int) -> int:
        return v % self.target.n

    def spec(self) -> Dict[str, Any]:
        h = self.target
        graph_doc: Dict[str, Any] = {"n": h.n, "edges": [list(e) for e in h.edges()]}
        return self._extra_spec({"kind": self.kind, "seed": self.seed, "h": graph_doc})


def rado_oracle() -> RadoOracle:
    return RadoOracle()


def random_bipartite_oracle(seed: int, density_bits: int = 1) -> RandomBipartiteOracle:
    return RandomBipartiteOracle(seed, density_bits)


def random_h_colourable_oracle(h: Graph, seed: int, density_bits: int = 1) -> RandomHColourableOracle:
    return RandomHColourableOracle(h, seed, density_bits)


def _scan(
    o: GraphOracle,
    attach: Sequence[int],
    avoid: AbstractSet[int],
    exclude: AbstractSet[int],
    budget: WitnessBudget,
    colour: Optional[int] = None,
) -> int:
    """
    Menor w <= cap adjacente a todos de `attach`, fora de avoid ∪ exclude ∪ attach,
    não adjacente a nenhum membro de `avoid` e, se pedido, com a cor dada.
    """
    forbidden = set(avoid) | set(exclude) | set(attach)
    ordered_avoid = sorted(avoid)
    for w in range(budget.cap + 1):
        if w in forbidden:
            continue
        if colour is not None and o.colour(w) != colour:
            continue
        if not all(o.adjacent(w, a) for a in attach):
            continue
        if any(o.adjacent(w, t) for t in ordered_avoid):
            continue
        return w
    logger.warning(f"Busca esgotada: attach={list(attach)}, |avoid|={len(avoid)}, cap={budget.cap}")
    raise SearchExhausted(budget.cap)


def fresh_neighbor(
    o: GraphOracle,
    u: int,
    avoid: Iterable[int],
    b: WitnessBudget,
    *,
    colour: Optional[int] = None,
) -> int:
    """Menor w ~ u com w ∉ avoid ∪ {u} e w não adjacente a nenhum vértice de avoid."""
    avoid = frozenset(avoid)
    if u in avoid:
        raise InvalidInputError(f"O vértice {u} pertence ao conjunto evitado")
    return _scan(o, [u], avoid, frozenset(), b, colour)


def fresh_common_neighbor(
    o: GraphOracle,
    u: int,
    v: int,
    avoid: Iterable[int],
    b: WitnessBudget,
    *,
    colour: Optional[int] = None,
) -> int:
    """Menor w adjacente a u e v, fora de avoid ∪ {u, v} e não adjacente a avoid."""
    avoid = frozenset(avoid)
    if u == v:
        raise InvalidInputError("fresh_common_neighbor exige u != v")
    if u in avoid or v in avoid:
        raise InvalidInputError("Extremos não podem pertencer ao conjunto evitado")
    return _scan(o, [u, v], avoid, frozenset(), b, colour)


def _colour_walk(h: Graph, start: int, end: int, min_length: int) -> List[int]:
    """Menor passeio em h de `start` a `end` com comprimento >= min_length."""
    reach: List[Set[int]] = [{start}]
    limit = min_length + 2 * h.n + 2
    while len(reach) <= limit:
        nxt: Set[int] = set()
        for c in reach[-1]:
            nxt |= h.neighbours(c)
        reach.append(nxt)
        length = len(reach) - 1
        if length >= min_length and end in nxt:
            walk = [end]
            for step in range(length - 1, -1, -1):
                previous = min(c for c in reach[step] if h.has_edge(c, walk[-1]))
                walk.append(previous)
            walk.reverse()
            return walk
    raise InvalidInputError(f"Não há passeio de {start} a {end} no grafo de cores")


def cec_witness_path(
    o: GraphOracle,
    u: int,
    v: int,
    avoid: Iterable[int],
    b: WitnessBudget,
) -> List[int]:
    """
    Caminho u..v de comprimento >= 2 cujos vértices internos não pertencem nem
    são adjacentes a `avoid`.

    Cada vértice interno evita também todos os vértices anteriores do caminho,
    exceto o predecessor, de modo que o caminho é induzido salvo nos extremos.
    Com u = v procura um ciclo de comprimento >= 3 por u. Em oráculos com mapa
    de cores, o caminho segue o menor passeio admissível no grafo de cores.
    """
    avoid = frozenset(avoid)
    if u in avoid or v in avoid:
        raise InvalidInputError("Extremos não podem pertencer ao conjunto evitado")
    if u != v and o.adjacent(u, v):
        raise AdjacentEndpoints(u, v)

    min_length = 3 if u == v else 2
    if o.has_colour_map:
        walk = _colour_walk(o.target, o.colour(u), o.colour(v), min_length)
        colours: List[Optional[int]] = walk[1:-1]
    else:
        colours = [None] * (min_length - 1)

    path = [u]
    for index, colour in enumerate(colours):
        last = index == len(colours) - 1
        predecessor = path[-1]
        blocked = set(avoid) | set(path[:-1])
        if last:
            attach = [predecessor, v]
            blocked.discard(v)
            w = _scan(o, attach, frozenset(blocked - {predecessor}), frozenset({u, v}), b, colour)
        else:
            w = _scan(o, [predecessor], frozenset(blocked - {predecessor}), frozenset({u, v}), b, colour)
        path.append(w)
    path.append(v)
    logger.debug(f"Caminho c.e.c. de {u} a {v}: {path}")
    return path


def is_cec_bounded(g: Graph, t_max: int) -> bool:
    """
    Diagnóstico c.e.c. restrito a um grafo finito: para todo par não adjacente
    (ou igual) u, v e todo T com |T| <= t_max, existe caminho qualificado em g.
    """
    if g.n == 0:
        return False
    nx_graph = g.to_networkx()
    for u in g.vertices():
        for v in range(u, g.n):
            if u != v and g.has_edge(u, v):
                continue
            others = [w for w in g.vertices() if w not in (u, v)]
            for size in range(0, t_max + 1):
                for t_set in combinations(others, size):
                    if not _has_qualifying_path(g, nx_graph, u, v, set(t_set)):
                        logger.debug(f"Falha c.e.c. em u={u}, v={v}, T={t_set}")
                        return False
    return True


def _has_qualifying_path(g: Graph, nx_graph: nx.Graph, u: int, v: int, t_set: Set[int]) -> bool:
    blocked = set(t_set)
    for t in t_set:
        blocked |= g.neighbours(t)
    allowed = [w for w in g.vertices() if w not in blocked and w not in (u, v)]
    if u != v:
        sub = nx_graph.subgraph(allowed + [u, v])
        return nx.has_path(sub, u, v)
    inner = nx_graph.subgraph(allowed)
    ends = [w for w in allowed if g.has_edge(u, w)]
    for a, c in combinations(ends, 2):
        if nx.has_path(inner, a, c):
            return True
    return False
