#!/usr/bin/env python
"""
Comandos dos resolvedores finitos: homomorfismos, homomorfismos
distintivos, automorfismos, invariantes, núcleos e fixações.
"""

from typing import Optional

import click

from domain.homomorphisms import (
    enumerate_homomorphisms,
    find_homomorphism,
    fixation,
    is_core,
    is_homomorphism,
    is_uniquely_h_colourable,
)
from domain.symmetry import (
    automorphism_group,
    chromatic_number,
    distinguishing_chromatic_number,
    distinguishing_number,
    find_distinguishing,
    is_distinguishing,
)
from infrastructure.serialization import emit_graph, emit_map, parse_map

from ..utils.logging import get_logger
from .common import CommandConfig, console, emit, handle_errors, load_graph, read_text, verdict, write_output

logger = get_logger(__name__)

graph_option = click.option("--g", "g", required=True, help="Grafo G (arquivo JSON ou cycle:N, path:N, ...)")
target_option = click.option("--h", "h", required=True, help="Grafo alvo H (arquivo JSON ou forma curta)")
map_option = click.option("--map", "map_path", required=True, help="Arquivo JSON {\"map\": [...]}")
out_option = click.option("--out", help="Arquivo de saída (padrão: stdout)")
group_cap_option = click.option("--group-cap", type=int, help="Limite da ordem de grupos de automorfismos")


@click.group("hom")
def hom_group():
    """Busca, verificação e enumeração de homomorfismos."""


@hom_group.command("find")
@graph_option
@target_option
@out_option
@click.pass_context
@handle_errors
def hom_find(ctx, g: str, h: str, out: Optional[str]):
    """Encontra um homomorfismo G -> H."""
    config = CommandConfig.build(ctx, "hom find", g=g, h=h, out=out)
    graph, target = load_graph(config.g, "--g"), load_graph(config.h, "--h")
    f = find_homomorphism(graph, target)
    if f is None:
        console.print("❌ Não existe homomorfismo")
        return verdict(False, "no-homomorphism")
    console.print("✅ Homomorfismo encontrado")
    write_output(emit_map(f), config.out)


@hom_group.command("check")
@graph_option
@target_option
@map_option
@click.pass_context
@handle_errors
def hom_check(ctx, g: str, h: str, map_path: str):
    """Verifica se o mapa é um homomorfismo."""
    config = CommandConfig.build(ctx, "hom check", g=g, h=h, map_path=map_path)
    graph, target = load_graph(config.g, "--g"), load_graph(config.h, "--h")
    check = is_homomorphism(parse_map(read_text(config.map_path), graph, target))
    edge = list(check.violating_edge) if check.violating_edge else None
    return verdict(check.ok, "edge-not-preserved", **({"edge": edge} if edge else {}))


@hom_group.command("enumerate")
@graph_option
@target_option
@click.option("--count-only", is_flag=True, help="Emite apenas a contagem")
@out_option
@click.pass_context
@handle_errors
def hom_enumerate(ctx, g: str, h: str, count_only: bool, out: Optional[str]):
    """Enumera todos os homomorfismos G -> H em ordem lexicográfica."""
    config = CommandConfig.build(ctx, "hom enumerate", g=g, h=h, out=out)
    graph, target = load_graph(config.g, "--g"), load_graph(config.h, "--h")
    maps = [list(f.image) for f in enumerate_homomorphisms(graph, target)]
    console.print(f"ℹ️ {len(maps)} homomorfismos")
    document = {"count": len(maps)} if count_only else {"count": len(maps), "maps": maps}
    emit(document, config.out)


@click.group("dist")
def dist_group():
    """Homomorfismos distintivos."""


@dist_group.command("check")
@graph_option
@target_option
@map_option
@click.pass_context
@handle_errors
def dist_check(ctx, g: str, h: str, map_path: str):
    """Verifica se o homomorfismo é distintivo."""
    config = CommandConfig.build(ctx, "dist check", g=g, h=h, map_path=map_path)
    graph, target = load_graph(config.g, "--g"), load_graph(config.h, "--h")
    check = is_distinguishing(parse_map(read_text(config.map_path), graph, target))
    witness = list(check.witness.image) if check.witness is not None else None
    return verdict(check.ok, "preserving-automorphism", **({"witness": witness} if witness else {}))


@dist_group.command("search")
@graph_option
@target_option
@out_option
@click.pass_context
@handle_errors
def dist_search(ctx, g: str, h: str, out: Optional[str]):
    """Procura o primeiro homomorfismo distintivo G -> H."""
    config = CommandConfig.build(ctx, "dist search", g=g, h=h, out=out)
    graph, target = load_graph(config.g, "--g"), load_graph(config.h, "--h")
    f = find_distinguishing(graph, target)
    if f is None:
        console.print("❌ Nenhum homomorfismo distintivo")
        return verdict(False, "no-distinguishing-homomorphism")
    console.print("✅ Homomorfismo distintivo encontrado")
    write_output(emit_map(f), config.out)


@click.group("aut")
def aut_group():
    """Grupos de automorfismos."""


@aut_group.command("group")
@graph_option
@group_cap_option
@click.option("--elements", is_flag=True, help="Lista todos os elementos do grupo")
@out_option
@click.pass_context
@handle_errors
def aut_group_cmd(ctx, g: str, group_cap: Optional[int], elements: bool, out: Optional[str]):
    """Calcula Aut(G)."""
    config = CommandConfig.build(ctx, "aut group", g=g, group_cap=group_cap, out=out)
    group = automorphism_group(load_graph(config.g, "--g"), config.group_cap)
    document = {"order": group.order, "generators": [list(a.image) for a in group.generators]}
    if elements:
        document["elements"] = [list(a.image) for a in group.elements]
    console.print(f"ℹ️ |Aut(G)| = {group.order}")
    emit(document, config.out)


@click.command("invariant")
@click.argument("which", type=click.Choice(["chi", "chi-d", "d"]))
@graph_option
@group_cap_option
@click.pass_context
@handle_errors
def invariant_cmd(ctx, which: str, g: str, group_cap: Optional[int]):
    """Calcula χ, χ_D ou D de G."""
    config = CommandConfig.build(ctx, f"invariant {which}", g=g, group_cap=group_cap)
    graph = load_graph(config.g, "--g")
    if which == "chi":
        value = chromatic_number(graph)
    elif which == "chi-d":
        value = distinguishing_chromatic_number(graph, config.group_cap)
    else:
        value = distinguishing_number(graph, config.group_cap)
    click.echo(str(value))


@click.group("core")
def core_group():
    """Núcleos."""


@core_group.command("check")
@target_option
@click.pass_context
@handle_errors
def core_check(ctx, h: str):
    """Verifica se H é um núcleo."""
    config = CommandConfig.build(ctx, "core check", h=h)
    return verdict(is_core(load_graph(config.h, "--h")), "not-a-core")


@click.group("unique")
def unique_group():
    """Coloração única."""


@unique_group.command("check")
@graph_option
@target_option
@group_cap_option
@click.pass_context
@handle_errors
def unique_check(ctx, g: str, h: str, group_cap: Optional[int]):
    """Verifica se G é unicamente H-colorível."""
    config = CommandConfig.build(ctx, "unique check", g=g, h=h, group_cap=group_cap)
    graph, target = load_graph(config.g, "--g"), load_graph(config.h, "--h")
    return verdict(is_uniquely_h_colourable(graph, target, config.group_cap), "not-uniquely-colourable")


@click.command("fixation")
@graph_option
@target_option
@map_option
@click.option("--format", "fmt", default="json", help="json ou dot")
@click.option("--map-out", help="Arquivo para o mapa canônico G(f) -> H")
@out_option
@click.pass_context
@handle_errors
def fixation_cmd(ctx, g: str, h: str, map_path: str, fmt: str, map_out: Optional[str], out: Optional[str]):
    """Constrói a fixação G(f)."""
    config = CommandConfig.build(
        ctx, "fixation", g=g, h=h, map_path=map_path, fmt=fmt, out=out, graph_output=True
    )
    graph, target = load_graph(config.g, "--g"), load_graph(config.h, "--h")
    fixed = fixation(graph, parse_map(read_text(config.map_path), graph, target), target)
    console.print(f"ℹ️ G(f) com {fixed.graph.n} vértices e {fixed.graph.num_edges} arestas")
    if map_out:
        write_output(emit_map(fixed.canonical_map), map_out)
    write_output(emit_graph(fixed.graph, config.fmt), config.out)


@click.group("graph")
def graph_group():
    """Utilitários de grafos."""


@graph_group.command("emit")
@graph_option
@click.option("--format", "fmt", default="json", help="json ou dot")
@out_option
@click.pass_context
@handle_errors
def graph_emit(ctx, g: str, fmt: str, out: Optional[str]):
    """Emite um grafo (arquivo ou forma curta) em JSON ou DOT."""
    config = CommandConfig.build(ctx, "graph emit", g=g, fmt=fmt, out=out, graph_output=True)
    write_output(emit_graph(load_graph(config.g, "--g"), config.fmt), config.out)
