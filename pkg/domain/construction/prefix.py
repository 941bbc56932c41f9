#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Prefixo finito g_s = f_A ∪ f_B de um homomorfismo distintivo G -> H ∨ K₂
e a checagem de rigidez da janela finita.
"""

import logging
from dataclasses import dataclass
from itertools import combinations
from typing import Any, Callable, Dict, List, Optional, Tuple

from domain.construction.state import ConstructionState
from domain.exceptions import (
    ColourMapViolation,
    InvalidInputError,
    InvariantViolation,
    MissingColourMap,
)
from domain.graphs import Graph, join, make_complete
from domain.reports import VerificationReport
from domain.symmetry import colour_preserving_group

logger = logging.getLogger(__name__)

SIDE_H = "H"
SIDE_K2 = "K2"

CHECK_B_FIXED = "b-fixed-pointwise"
CHECK_NO_SWAP = "no-good-pair-swap"


@dataclass(frozen=True, order=True)
class Label:
    """Imagem em V(H) ⊎ {1, 2}: ("H", i) ou ("K2", 1|2)."""

    side: str
    value: int

    @classmethod
    def parse(cls, text: str) -> "Label":
        side, _, raw = text.partition(":")
        if side not in (SIDE_H, SIDE_K2) or not raw.isdigit():
            raise InvalidInputError(f"Rótulo inválido: {text!r}")
        value = int(raw)
        if side == SIDE_K2 and value not in (1, 2):
            raise InvalidInputError(f"Rótulo K2 precisa ser 1 ou 2: {text!r}")
        return cls(side, value)

    def __str__(self) -> str:
        return f"{self.side}:{self.value}"


@dataclass(frozen=True)
class PartialHom:
    """Mapa finito dos ids do oráculo para H ∨ K₂."""

    assignments: Dict[int, Label]
    h: Graph

    @property
    def target(self) -> Graph:
        """H ∨ K₂ com os vértices de K₂ depois dos de H (1 -> h.n, 2 -> h.n + 1)."""
        return join(self.h, make_complete(2))

    def target_index(self, label: Label) -> int:
        if label.side == SIDE_H:
            return label.value
        return self.h.n + label.value - 1

    def domain(self) -> List[int]:
        return sorted(self.assignments)

    def fibre_colours(self) -> List[int]:
        """Índice no alvo de cada vértice do domínio, na ordem de `domain()`."""
        return [self.target_index(self.assignments[v]) for v in self.domain()]

    def edge_violations(self, adjacent: Callable[[int, int], bool]) -> List[Tuple[int, int]]:
        target = self.target
        return [
            (u, v)
            for u, v in combinations(self.domain(), 2)
            if adjacent(u, v)
            and not target.has_edge(self.target_index(self.assignments[u]), self.target_index(self.assignments[v]))
        ]

    def to_dict(self) -> Dict[str, Any]:
        return {"assignments": [[v, str(self.assignments[v])] for v in self.domain()]}


def k2_fibre_shape(state: ConstructionState, gs: PartialHom) -> Tuple[str, ...]:
    """Forma das fibras de K₂ sobre a árvore: a sequência de rótulos de cada ramo, ordenada."""
    shapes = []
    for branch in state.tree.branches:
        shapes.append("".join(str(gs.assignments[v].value) for v in branch.vertices))
    return tuple(sorted(shapes, key=lambda x: (len(x), x)))


def gs_prefix(
    state: ConstructionState,
    h: Graph,
    colour: Optional[Callable[[int], int]] = None,
) -> PartialHom:
    """
    Monta g_s na janela B_t ∪ A.

    Vértices de B recebem K2:1 em distância par da raiz e K2:2 em distância
    ímpar; vértices de A recebem H:colour(v).

    Raises:
        MissingColourMap: se nem `colour` nem o oráculo fornecem um mapa de cores
        ColourMapViolation: se o mapa de cores não preserva uma aresta da janela
        InvariantViolation: se B não induz a árvore registrada
    """
    o = state.oracle
    if not state.good_pairs:
        raise InvalidInputError("gs_prefix exige ao menos um par bom processado")
    if colour is None:
        if not o.has_colour_map:
            raise MissingColourMap(f"O oráculo {o.kind} não carrega mapa de cores")
        colour = o.colour

    assignments: Dict[int, Label] = {}
    for v, depth in state.tree.depths().items():
        assignments[v] = Label(SIDE_K2, 1 if depth % 2 == 0 else 2)
    for v in state.a_vertices:
        c = colour(v)
        if not 0 <= c < h.n:
            raise ColourMapViolation((v, v))
        assignments[v] = Label(SIDE_H, c)
    gs = PartialHom(assignments, h)

    for u, v in gs.edge_violations(o.adjacent):
        if assignments[u].side == SIDE_H and assignments[v].side == SIDE_H:
            raise ColourMapViolation((u, v))
        raise InvariantViolation(f"Aresta ({u}, {v}) entre vértices de B fora da árvore")
    logger.info(f"g_s montado em {len(assignments)} vértices (|B|={len(state.b_vertices)})")
    return gs


def window_graph(state: ConstructionState, gs: PartialHom) -> Tuple[Graph, Dict[int, int]]:
    """Grafo induzido pelo oráculo no domínio de gs, com o mapa id -> índice."""
    domain = gs.domain()
    reindex = {v: i for i, v in enumerate(domain)}
    edges = [(reindex[u], reindex[v]) for u, v in combinations(domain, 2) if state.oracle.adjacent(u, v)]
    return Graph.from_edges(len(domain), edges), reindex


def prefix_rigidity_check(
    state: ConstructionState,
    gs: PartialHom,
    group_cap: Optional[int] = None,
) -> VerificationReport:
    """
    Substituto finito da propriedade distintiva: todo automorfismo da janela
    que preserva as fibras de gs fixa B ponto a ponto e não leva x em y em
    nenhum par bom.
    """
    window, reindex = window_graph(state, gs)
    group = colour_preserving_group(window, gs.fibre_colours(), group_cap)
    b_indices = [reindex[v] for v in state.b_vertices if v in reindex]
    moved_b = None
    swapped = []
    for alpha in group:
        if moved_b is None and any(alpha(i) != i for i in b_indices):
            moved_b = alpha
        for gp in state.good_pairs:
            if alpha(reindex[gp.x]) == reindex[gp.y] and gp.pair not in swapped:
                swapped.append(gp.pair)

    report = VerificationReport()
    report.add(
        CHECK_B_FIXED,
        moved_b is None,
        f"automorfismo move B: {list(moved_b.image)}" if moved_b is not None else "",
    )
    report.add(CHECK_NO_SWAP, not swapped, f"pares trocados: {swapped}" if swapped else "")
    logger.info(f"Rigidez da janela: |grupo|={group.order}, ok={report.ok}")
    return report
