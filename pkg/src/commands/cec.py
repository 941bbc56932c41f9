#!/usr/bin/env python
"""
Comandos de testemunhas c.e.c. sobre oráculos e do diagnóstico em grafos finitos.
"""

from typing import Optional

import click

from domain.exceptions import InvalidInputError
from domain.oracles import WitnessBudget, cec_witness_path, is_cec_bounded
from infrastructure.serialization import parse_oracle

from ..utils.logging import get_logger
from .common import CommandConfig, console, emit, handle_errors, load_graph, read_text, verdict

logger = get_logger(__name__)


def _parse_avoid(raw: str) -> list:
    if not raw.strip():
        return []
    try:
        return sorted({int(part) for part in raw.split(",")})
    except ValueError:
        raise InvalidInputError(f"--avoid precisa ser uma lista de inteiros separados por vírgula: {raw!r}")


@click.group("cec")
def cec_group():
    """Caminhos c.e.c."""


@cec_group.command("witness")
@click.option("--oracle", required=True, help="Arquivo JSON com a especificação do oráculo")
@click.option("--u", "u", type=int, required=True)
@click.option("--v", "v", type=int, required=True)
@click.option("--avoid", default="", help="Conjunto T, ex.: 1,4,7")
@click.option("--cap", type=int, help="Orçamento de busca (maior id examinado)")
@click.option("--out", help="Arquivo de saída (padrão: stdout)")
@click.pass_context
@handle_errors
def cec_witness(ctx, oracle: str, u: int, v: int, avoid: str, cap: Optional[int], out: Optional[str]):
    """Procura um caminho u..v cujos vértices internos evitam T e seus vizinhos."""
    config = CommandConfig.build(ctx, "cec witness", oracle=oracle, cap=cap, out=out)
    if u < 0 or v < 0:
        raise InvalidInputError("Vértices do oráculo são naturais")
    o = parse_oracle(read_text(config.oracle))
    path = cec_witness_path(o, u, v, _parse_avoid(avoid), WitnessBudget(config.cap))
    console.print(f"✅ Caminho de comprimento {len(path) - 1}")
    emit({"path": path}, config.out)


@cec_group.command("bounded-check")
@click.option("--g", "g", required=True, help="Grafo G (arquivo JSON ou forma curta)")
@click.option("--t-max", type=int, default=1, show_default=True, help="Tamanho máximo de T")
@click.pass_context
@handle_errors
def bounded_check(ctx, g: str, t_max: int):
    """Diagnóstico c.e.c. restrito a um grafo finito."""
    config = CommandConfig.build(ctx, "cec bounded-check", g=g)
    if t_max < 0:
        raise InvalidInputError("--t-max precisa ser >= 0")
    return verdict(is_cec_bounded(load_graph(config.g, "--g"), t_max), "no-qualifying-path")
