#!/usr/bin/env python
"""
Comandos das verificações de propriedades dos homomorfismos distintivos.
"""

from typing import Optional

import click

from domain.lemma_checks import lemma1_property_checks
from domain.symmetry import non_composition_witness

from ..utils.logging import get_logger
from .common import EXIT_FALSE, EXIT_OK, CommandConfig, console, emit, handle_errors, verdict

logger = get_logger(__name__)


@click.group("lemma1")
def lemma1_group():
    """Propriedades de subgrupo, invariância, coloração única, união e composição."""


@lemma1_group.command("run-suite")
@click.option("--group-cap", type=int, help="Limite da ordem de grupos de automorfismos")
@click.option("--out", help="Arquivo de saída (padrão: stdout)")
@click.pass_context
@handle_errors
def run_suite(ctx, group_cap: Optional[int], out: Optional[str]):
    """Executa as verificações sobre o corpus padrão."""
    config = CommandConfig.build(ctx, "lemma1 run-suite", group_cap=group_cap, out=out)
    report = lemma1_property_checks(group_cap=config.group_cap)
    for item, count in sorted(report.items().items()):
        console.print(f"ℹ️ {item}: {count} casos")
    emit(report.to_list(), config.out)
    if report.ok:
        console.print("✅ Todas as verificações passaram")
        return EXIT_OK
    console.print(f"❌ {len(report.failures())} verificações falharam")
    return EXIT_FALSE


@lemma1_group.command("non-composition")
@click.option("--max-order", type=int, default=7, show_default=True, help="Ordem máxima dos grafos candidatos")
@click.option("--out", help="Arquivo de saída (padrão: stdout)")
@click.pass_context
@handle_errors
def non_composition(ctx, max_order: int, out: Optional[str]):
    """Procura f: G -> C5 e g: C5 -> K3 distintivos com g∘f não distintivo."""
    config = CommandConfig.build(ctx, "lemma1 non-composition", out=out)
    found = non_composition_witness(max_order=max_order)
    if found is None:
        console.print("❌ Nenhuma testemunha dentro do orçamento")
        return verdict(False, "not-found")
    console.print(f"✅ Testemunha em grafo de ordem {found.graph.n}")
    emit(
        {
            "graph": {"n": found.graph.n, "edges": [list(e) for e in found.graph.edges()]},
            "inner": list(found.inner.image),
            "outer": list(found.outer.image),
            "composite": list(found.composite.image),
            "witness": list(found.witness.image),
        },
        config.out,
    )
