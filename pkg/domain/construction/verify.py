#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Verificador dos invariantes da construção, consultando o oráculo, e a
árvore abstrata T_s de referência.
"""

import logging
from itertools import combinations
from typing import Sequence

from domain.construction.branch_spec import BranchSpec
from domain.construction.state import ConstructionState, pair_enumeration
from domain.exceptions import BranchSpecExhausted, InvalidInputError
from domain.graphs import Graph, are_isomorphic
from domain.reports import VerificationReport

logger = logging.getLogger(__name__)

CHECK_PROCESSED = "processed-prefix"
CHECK_SEPARATION = "separation"
CHECK_FINITE_PREFIX = "branch-prefix"
CHECK_BAD_IFF_B = "bad-iff-in-b"
CHECK_DISJOINT = "b-disjoint-from-a"
CHECK_INDUCED_TREE = "induced-tree"
CHECK_LENGTHS = "branch-lengths"


def tree_with_lengths(lengths: Sequence[int]) -> Graph:
    """Raiz 0 com caminhos pendentes disjuntos dos comprimentos dados."""
    edges = []
    n = 1
    for length in lengths:
        previous = 0
        for _ in range(length):
            edges.append((previous, n))
            previous = n
            n += 1
    return Graph.from_edges(n, edges)


def build_ts_prefix(s: BranchSpec, count: int) -> Graph:
    """Árvore com raiz e os primeiros `count` comprimentos de s como ramos."""
    if count < 1:
        raise InvalidInputError(f"count precisa ser >= 1, recebido {count}")
    return tree_with_lengths(s.first(count))


def _check_processed(state: ConstructionState, report: VerificationReport) -> None:
    status = state.status
    unprocessed = [i for i in range(1, state.t + 1) if not status.is_processed(pair_enumeration(i))]
    expected_good = {p for _, p in state.enumerated_pairs() if not status.is_bad(p)}
    recorded = [gp.pair for gp in state.good_pairs]
    problems = []
    if state.cursor < state.t:
        problems.append(f"cursor {state.cursor} < t {state.t}")
    if unprocessed:
        problems.append(f"pares não processados: {unprocessed}")
    if set(recorded) != expected_good or len(recorded) != state.t:
        problems.append(f"pares bons registrados {recorded} != {sorted(expected_good)}")
    if set(recorded) != set(status.processed_good):
        problems.append("lista de pares bons difere do estado dos pares")
    report.add(CHECK_PROCESSED, not problems, "; ".join(problems))


def _check_separation(state: ConstructionState, report: VerificationReport) -> None:
    o = state.oracle
    b_set = set(state.b_vertices)
    bad = [
        gp.pair
        for gp in state.good_pairs
        if gp.witness not in b_set or o.adjacent(gp.witness, gp.x) == o.adjacent(gp.witness, gp.y)
    ]
    report.add(CHECK_SEPARATION, not bad, f"pares sem testemunha válida: {bad}" if bad else "")


def _check_branch_prefix(state: ConstructionState, report: VerificationReport) -> None:
    try:
        needed = state.spec.first(state.t - 1) if state.t > 1 else []
    except BranchSpecExhausted as exc:
        report.add(CHECK_FINITE_PREFIX, False, str(exc))
        return
    missing = sorted(set(needed) - state.used_lengths)
    report.add(CHECK_FINITE_PREFIX, not missing, f"comprimentos ausentes: {missing}" if missing else "")


def _check_bad_iff_b(state: ConstructionState, report: VerificationReport) -> None:
    b_set = frozenset(state.b_vertices)
    ok = state.status.poisoned == b_set
    detail = "" if ok else f"envenenados {sorted(state.status.poisoned)} != B {sorted(b_set)}"
    report.add(CHECK_BAD_IFF_B, ok, detail)


def _check_disjoint(state: ConstructionState, report: VerificationReport) -> None:
    b_vertices = state.b_vertices
    shared = sorted(set(b_vertices) & set(state.a_vertices))
    repeated = len(b_vertices) != len(set(b_vertices))
    problems = []
    if shared:
        problems.append(f"vértices em A e B: {shared}")
    if repeated:
        problems.append("vértice repetido em B")
    report.add(CHECK_DISJOINT, not problems, "; ".join(problems))


def _check_induced_tree(state: ConstructionState, report: VerificationReport) -> None:
    o = state.oracle
    expected = state.tree.tree_edges()
    wrong = []
    for u, v in combinations(sorted(set(state.b_vertices)), 2):
        if o.adjacent(u, v) != ((u, v) in expected):
            wrong.append((u, v))
    if not wrong:
        # Conferência independente contra a árvore abstrata.
        reindex = {v: i for i, v in enumerate(state.b_vertices)}
        try:
            window = Graph.from_edges(len(reindex), [(reindex[u], reindex[v]) for u, v in expected])
            isomorphic = are_isomorphic(window, tree_with_lengths(state.tree.lengths()))
        except InvalidInputError:
            isomorphic = False
        if not isomorphic:
            wrong.append(("isomorfismo", None))
    report.add(CHECK_INDUCED_TREE, not wrong, f"pares divergentes: {wrong}" if wrong else "")


def _check_lengths(state: ConstructionState, report: VerificationReport) -> None:
    lengths = state.tree.lengths()
    problems = []
    if len(lengths) != len(set(lengths)):
        problems.append(f"comprimentos repetidos: {lengths}")
    outside = [x for x in lengths if not state.spec.contains(x)]
    if outside:
        problems.append(f"fora de {state.spec}: {outside}")
    short = [br.length for br in state.tree.branches if len(br.vertices) != br.length]
    if short:
        problems.append(f"ramos com número errado de vértices: {short}")
    report.add(CHECK_LENGTHS, not problems, "; ".join(problems))


def verify_state(state: ConstructionState) -> VerificationReport:
    """
    Confere contra o oráculo os cinco invariantes da construção, a árvore
    induzida por B, as testemunhas de separação e os comprimentos de ramos.

    Nunca levanta exceção por falha: tudo vai para o relatório.
    """
    report = VerificationReport()
    _check_processed(state, report)
    _check_separation(state, report)
    _check_branch_prefix(state, report)
    _check_bad_iff_b(state, report)
    _check_disjoint(state, report)
    _check_induced_tree(state, report)
    _check_lengths(state, report)
    if report.ok:
        logger.debug(f"Estado t={state.t} verificado: {len(report.checks)} checagens")
    else:
        logger.warning(f"Estado t={state.t} com falhas: {[c.name for c in report.failures()]}")
    return report
