#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Algoritmo de partição em fluxo: a cada passo um par bom é separado por um
vértice de B, que cresce como uma árvore T_s induzida no oráculo.
"""

import logging
from dataclasses import replace
from typing import List, Optional, Set

from domain.construction.branch_spec import BranchSpec
from domain.construction.state import (
    Branch,
    ConstructionState,
    GoodPair,
    PairStatus,
    TsTree,
    pair_enumeration,
)
from domain.construction.verify import verify_state
from domain.exceptions import InvalidInputError, InvariantViolation, SearchExhausted
from domain.oracles import GraphOracle, WitnessBudget, cec_witness_path, fresh_neighbor

logger = logging.getLogger(__name__)


def init_construction(o: GraphOracle, s: BranchSpec, b: WitnessBudget) -> ConstructionState:
    """
    Processa o par #1: z₁ = fresh_neighbor(x₁, {y₁}) vira a raiz e separa {x₁, y₁}.
    """
    x, y = pair_enumeration(1)
    root = fresh_neighbor(o, x, {y}, b)
    logger.info(f"Raiz z₁ = {root} separando {{{x}, {y}}}")
    return ConstructionState(
        oracle=o,
        spec=s,
        budget=b,
        t=1,
        tree=TsTree(root),
        status=PairStatus(poisoned=frozenset({root}), processed_good=frozenset({(x, y)})),
        good_pairs=(GoodPair(x, y, root),),
        cursor=1,
    )


def _next_good_pair(state: ConstructionState) -> int:
    index = state.cursor + 1
    while state.status.is_bad(pair_enumeration(index)):
        index += 1
    return index


def _grow(
    o: GraphOracle,
    attach: int,
    count: int,
    blocked: Set[int],
    b: WitnessBudget,
) -> List[int]:
    """Cresce `count` vértices em cadeia a partir de `attach`, cada um evitando `blocked` e a cadeia."""
    chain: List[int] = []
    point = attach
    for _ in range(count):
        avoid = (blocked | set(chain) | {attach}) - {point}
        w = fresh_neighbor(o, point, avoid, b)
        chain.append(w)
        point = w
    return chain


def _advance(state: ConstructionState) -> ConstructionState:
    o, s, b = state.oracle, state.spec, state.budget
    index = _next_good_pair(state)
    x, y = pair_enumeration(index)
    root = state.tree.root

    # T′: vértices de pares bons, B_t e o par atual.
    t_prime: Set[int] = set(state.a_vertices) | set(state.b_vertices) | {x, y}

    k = s.least_missing(state.used_lengths)
    branch_k = _grow(o, root, k, t_prime, b)
    t_second = t_prime | set(branch_k)

    z1_prime = fresh_neighbor(o, root, t_second - {root}, b)
    path = cec_witness_path(o, z1_prime, x, (t_second - {x}) | {y}, b)
    chain = path[:-1]
    z = chain[-1]

    chain_length = len(chain)
    q = s.least_above(chain_length, state.used_lengths | {k})
    extension = _grow(o, z, q - chain_length, t_second | set(chain) | {y}, b)
    branch_q = tuple(chain + extension)

    new_vertices = set(branch_k) | set(branch_q)
    logger.info(
        f"t={state.t + 1}: par #{index} {{{x}, {y}}} separado por z={z}; ramos k={k}, Q={q}"
    )
    return replace(
        state,
        t=state.t + 1,
        tree=state.tree.add(Branch(k, tuple(branch_k)), Branch(q, branch_q)),
        status=PairStatus(
            poisoned=state.status.poisoned | new_vertices,
            processed_good=state.status.processed_good | {(x, y)},
        ),
        good_pairs=state.good_pairs + (GoodPair(x, y, z),),
        cursor=index,
    )


def step(state: ConstructionState) -> ConstructionState:
    """
    Processa o próximo par bom. Em SearchExhausted a exceção carrega o
    estado anterior intacto, permitindo retomar com orçamento maior.
    """
    try:
        return _advance(state)
    except SearchExhausted as exc:
        raise SearchExhausted(exc.cap, f"Passo t={state.t + 1} esgotou o orçamento (cap={exc.cap})", state)


def run(
    o: GraphOracle,
    s: BranchSpec,
    steps: int,
    b: WitnessBudget,
    verify: bool = True,
    resume: Optional[ConstructionState] = None,
) -> ConstructionState:
    """
    init seguido de steps-1 passos, verificando o estado após cada um.

    Args:
        o: Oráculo de adjacência
        s: Especificação de comprimentos de ramos
        steps: Tempo final t desejado
        b: Orçamento de busca
        verify: Se deve rodar verify_state a cada passo
        resume: Estado parcial de onde continuar (opcional)

    Returns:
        Estado no tempo `steps`
    """
    if steps < 1:
        raise InvalidInputError(f"steps precisa ser >= 1, recebido {steps}")

    def checked(current: ConstructionState) -> ConstructionState:
        if verify:
            report = verify_state(current)
            if not report.ok:
                names = ", ".join(c.name for c in report.failures())
                raise InvariantViolation(f"Invariantes violados em t={current.t}: {names}", report.to_dict())
        return current

    state = checked(resume.with_budget(b) if resume is not None else init_construction(o, s, b))
    while state.t < steps:
        state = checked(step(state))
    return state

