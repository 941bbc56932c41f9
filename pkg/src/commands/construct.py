#!/usr/bin/env python
"""
Comandos da construção incremental sobre oráculos e do prefixo g_s.
"""

from typing import Optional

import click

from domain.construction import gs_prefix, prefix_rigidity_check, run, verify_state
from domain.exceptions import MissingColourMap, SearchExhausted
from domain.oracles import WitnessBudget
from infrastructure.serialization import emit_partial_hom, emit_state, parse_oracle, parse_state

from ..utils.logging import get_logger
from .common import (
    EXIT_FALSE,
    EXIT_OK,
    CommandConfig,
    console,
    emit,
    handle_errors,
    load_graph,
    read_text,
    write_output,
)

logger = get_logger(__name__)

state_option = click.option("--state", required=True, help="Arquivo JSON de estado da construção")
out_option = click.option("--out", help="Arquivo de saída (padrão: stdout)")


def _report_exit(report) -> int:
    emit(report.to_dict())
    if report.ok:
        console.print(f"✅ {len(report.checks)} checagens passaram")
        return EXIT_OK
    console.print(f"❌ Falhas: {', '.join(c.name for c in report.failures())}")
    return EXIT_FALSE


@click.group("construct")
def construct_group():
    """Construção da partição em fluxo sobre um oráculo."""


@construct_group.command("run")
@click.option("--oracle", help="Arquivo JSON com a especificação do oráculo")
@click.option("--s", "s", help="Especificação de ramos: odd, even, arith:a,d, set:...")
@click.option("--steps", type=int, required=True, help="Tempo final t")
@click.option("--cap", type=int, help="Orçamento de busca (maior id examinado)")
@click.option("--verify/--no-verify", default=True, help="Verifica os invariantes a cada passo")
@click.option("--resume", help="Estado parcial de onde continuar")
@out_option
@click.pass_context
@handle_errors
def construct_run(
    ctx,
    oracle: Optional[str],
    s: Optional[str],
    steps: int,
    cap: Optional[int],
    verify: bool,
    resume: Optional[str],
    out: Optional[str],
):
    """Executa init e steps-1 passos; em orçamento esgotado salva o estado parcial."""
    config = CommandConfig.build(ctx, "construct run", oracle=oracle, s=s, steps=steps, cap=cap, out=out)
    budget = WitnessBudget(config.cap)
    if resume:
        previous = parse_state(read_text(resume))
        o, spec = previous.oracle, previous.spec
    else:
        if config.oracle is None:
            raise click.UsageError("--oracle é obrigatório sem --resume")
        previous = None
        o, spec = parse_oracle(read_text(config.oracle)), config.branch_spec
    try:
        state = run(o, spec, config.steps, budget, verify=verify, resume=previous)
    except SearchExhausted as e:
        if e.state is not None and config.out:
            write_output(emit_state(e.state), config.out)
            console.print(f"⚠️ Estado parcial em t={e.state.t} salvo para retomada")
        raise
    console.print(f"✅ Construção concluída em t={state.t} com {len(state.tree.branches)} ramos")
    write_output(emit_state(state), config.out)


@construct_group.command("verify")
@state_option
@click.pass_context
@handle_errors
def construct_verify(ctx, state: str):
    """Confere os invariantes de um estado salvo contra o oráculo."""
    CommandConfig.build(ctx, "construct verify", state=state)
    return _report_exit(verify_state(parse_state(read_text(state))))


@click.group("gs")
def gs_group():
    """Prefixo g_s do homomorfismo distintivo em H ∨ K2."""


def _target_for(config: CommandConfig, loaded):
    if config.h is not None:
        return load_graph(config.h, "--h")
    if loaded.oracle.target is None:
        raise MissingColourMap(f"O oráculo {loaded.oracle.kind} não tem mapa de cores; informe --h")
    return loaded.oracle.target


@gs_group.command("emit")
@state_option
@click.option("--h", "h", help="Grafo H (padrão: alvo do mapa de cores do oráculo)")
@out_option
@click.pass_context
@handle_errors
def gs_emit(ctx, state: str, h: Optional[str], out: Optional[str]):
    """Emite g_s na janela B_t ∪ A."""
    config = CommandConfig.build(ctx, "gs emit", state=state, h=h, out=out)
    loaded = parse_state(read_text(config.state))
    gs = gs_prefix(loaded, _target_for(config, loaded))
    write_output(emit_partial_hom(gs), config.out)


@gs_group.command("rigidity")
@state_option
@click.option("--h", "h", help="Grafo H (padrão: alvo do mapa de cores do oráculo)")
@click.option("--group-cap", type=int, help="Limite da ordem de grupos de automorfismos")
@click.pass_context
@handle_errors
def gs_rigidity(ctx, state: str, h: Optional[str], group_cap: Optional[int]):
    """Checa que os automorfismos da janela que preservam fibras fixam B e não trocam pares bons."""
    config = CommandConfig.build(ctx, "gs rigidity", state=state, h=h, group_cap=group_cap)
    loaded = parse_state(read_text(config.state))
    gs = gs_prefix(loaded, _target_for(config, loaded))
    return _report_exit(prefix_rigidity_check(loaded, gs, config.group_cap))
