#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Verificações executáveis das propriedades dos homomorfismos distintivos:
subgrupo preservador, invariância por Aut(H), concordância em grafos
unicamente H-coloríveis e união de componentes não isomorfas.
"""

import logging
from dataclasses import dataclass
from itertools import combinations
from typing import Any, Dict, List, Optional, Sequence

from domain.graphs import (
    Graph,
    are_isomorphic,
    disjoint_union,
    is_connected,
    make_complete,
    make_cycle,
    make_empty,
    make_path,
)
from domain.homomorphisms import (
    VertexMap,
    enumerate_homomorphisms,
    fixation,
    is_uniquely_h_colourable,
    union_map,
)
from domain.symmetry import (
    Permutation,
    automorphism_group,
    compose_with_automorphism,
    is_distinguishing,
    preserving_subgroup,
)

logger = logging.getLogger(__name__)

ITEM_SUBGROUP = "L1-1"
ITEM_AUT_INVARIANCE = "L1-3"
ITEM_UNIQUE_COLOURABLE = "L1-4"
ITEM_UNION = "L1-5"


@dataclass(frozen=True)
class LemmaCase:
    case_id: str
    graph: Graph
    target: Graph
    mapping: VertexMap


@dataclass(frozen=True)
class LemmaCheckEntry:
    item: str
    case: str
    passed: bool
    witness: Optional[Permutation] = None

    def to_dict(self) -> Dict[str, Any]:
        return {
            "item": self.item,
            "case": self.case,
            "pass": self.passed,
            "witness": list(self.witness.image) if self.witness is not None else None,
        }


@dataclass(frozen=True)
class LemmaReport:
    entries: List[LemmaCheckEntry]

    @property
    def ok(self) -> bool:
        return all(e.passed for e in self.entries)

    def failures(self) -> List[LemmaCheckEntry]:
        return [e for e in self.entries if not e.passed]

    def items(self) -> Dict[str, int]:
        counts: Dict[str, int] = {}
        for e in self.entries:
            counts[e.item] = counts.get(e.item, 0) + 1
        return counts

    def to_list(self) -> List[Dict[str, Any]]:
        return [e.to_dict() for e in self.entries]


def _pendant_cycle(k: int) -> Graph:
    """C_k com um vértice pendente ligado ao vértice 0."""
    cycle = make_cycle(k)
    return Graph.from_edges(k + 1, cycle.edges() + [(0, k)])


def _star(leaves: int) -> Graph:
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def default_lemma1_corpus() -> List[LemmaCase]:
    """
    Corpus padrão de casos (G, H, f) com |V(G)| <= 8.

    Para cada par (G, H) H-colorível entram o primeiro e o último homomorfismo
    na ordem lexicográfica.
    """
    k2, k3, c5 = make_complete(2), make_complete(3), make_cycle(5)
    named_graphs = [
        ("P1", make_path(1)),
        ("P2", make_path(2)),
        ("P3", make_path(3)),
        ("P5", make_path(5)),
        ("C4", make_cycle(4)),
        ("C5", make_cycle(5)),
        ("C6", make_cycle(6)),
        ("C7", make_cycle(7)),
        ("C8", make_cycle(8)),
        ("K3", make_complete(3)),
        ("2K2", disjoint_union(k2, k2)),
        ("K1+K2", disjoint_union(make_empty(1), k2)),
        ("star3", _star(3)),
        ("C5+pendant", _pendant_cycle(5)),
        ("C4+pendant", _pendant_cycle(4)),
    ]
    targets = [("K2", k2), ("K3", k3), ("C5", c5)]
    corpus: List[LemmaCase] = []
    for g_name, g in named_graphs:
        for h_name, h in targets:
            homs = list(enumerate_homomorphisms(g, h))
            if not homs:
                continue
            picks = [homs[0]] if len(homs) == 1 else [homs[0], homs[-1]]
            for index, f in enumerate(picks):
                corpus.append(LemmaCase(f"{g_name}->{h_name}#{index}", g, h, f))
    # Fixações de P1 e P2 por C5 são unicamente C5-coloríveis.
    for g_name, g in [("P1", make_path(1)), ("P2", make_path(2))]:
        f = next(enumerate_homomorphisms(g, c5))
        fixed = fixation(g, f, c5)
        if fixed.graph.n <= 8:
            corpus.append(LemmaCase(f"fix({g_name})->C5#0", fixed.graph, c5, fixed.canonical_map))
    logger.debug(f"Corpus padrão com {len(corpus)} casos")
    return corpus


def _check_subgroup(case: LemmaCase, group_cap: Optional[int]) -> LemmaCheckEntry:
    subgroup = preserving_subgroup(case.graph, case.mapping, group_cap)
    return LemmaCheckEntry(ITEM_SUBGROUP, case.case_id, subgroup.is_closed())


def _check_aut_invariance(case: LemmaCase, group_cap: Optional[int]) -> LemmaCheckEntry:
    base = bool(is_distinguishing(case.mapping))
    for beta in automorphism_group(case.target, group_cap):
        if bool(is_distinguishing(compose_with_automorphism(beta, case.mapping))) != base:
            return LemmaCheckEntry(ITEM_AUT_INVARIANCE, case.case_id, False, beta)
    return LemmaCheckEntry(ITEM_AUT_INVARIANCE, case.case_id, True)


def _check_unique_colourable(case: LemmaCase, group_cap: Optional[int]) -> Optional[LemmaCheckEntry]:
    if not is_uniquely_h_colourable(case.graph, case.target, group_cap):
        return None
    verdicts = set()
    for f in enumerate_homomorphisms(case.graph, case.target):
        verdicts.add(bool(is_distinguishing(f)))
        if len(verdicts) > 1:
            check = is_distinguishing(f)
            return LemmaCheckEntry(ITEM_UNIQUE_COLOURABLE, case.case_id, False, check.witness)
    return LemmaCheckEntry(ITEM_UNIQUE_COLOURABLE, case.case_id, True)


def _union_candidates(corpus: Sequence[LemmaCase]) -> List[LemmaCase]:
    return [c for c in corpus if is_connected(c.graph) and is_distinguishing(c.mapping)]


def _check_union(first: LemmaCase, second: LemmaCase) -> LemmaCheckEntry:
    union = union_map(first.mapping, second.mapping)
    check = is_distinguishing(union)
    return LemmaCheckEntry(ITEM_UNION, f"{first.case_id}+{second.case_id}", check.ok, check.witness)


def lemma1_property_checks(
    corpus: Optional[Sequence[LemmaCase]] = None,
    group_cap: Optional[int] = None,
) -> LemmaReport:
    """
    Executa as verificações sobre o corpus e devolve um relatório por item.

    Falhas viram entradas do relatório, nunca exceções.
    """
    cases = list(corpus) if corpus is not None else default_lemma1_corpus()
    entries: List[LemmaCheckEntry] = []
    for case in cases:
        entries.append(_check_subgroup(case, group_cap))
        entries.append(_check_aut_invariance(case, group_cap))
        unique = _check_unique_colourable(case, group_cap)
        if unique is not None:
            entries.append(unique)

    candidates = _union_candidates(cases)
    for first, second in combinations(candidates, 2):
        if first.target != second.target or are_isomorphic(first.graph, second.graph):
            continue
        entries.append(_check_union(first, second))

    report = LemmaReport(sorted(entries, key=lambda e: (e.item, e.case)))
    logger.info(
        f"Verificações concluídas: {len(report.entries)} entradas, {len(report.failures())} falhas"
    )
    return report
