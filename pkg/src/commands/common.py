#!/usr/bin/env python
"""
Infraestrutura compartilhada pelos comandos: validação das opções,
leitura de entradas, escrita de saídas e mapeamento de erros para
códigos de saída.
"""

import functools
import os
import sys
from typing import Any, Callable, Optional

import click
from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator, model_validator
from rich.console import Console

from domain.construction import BranchSpec
from domain.exceptions import (
    BranchSpecExhausted,
    ColourMapViolation,
    ConfigurationError,
    GraphMismatchError,
    GroupTooLarge,
    HomdistError,
    InvalidInputError,
    InvariantViolation,
    MissingColourMap,
    NotAHomomorphismError,
    SearchExhausted,
    SizeMismatchError,
)
from domain.graphs import Graph, graph_from_shorthand
from infrastructure.config import Settings
from infrastructure.serialization import GRAPH_FORMATS, emit_json, parse_graph

from ..utils.logging import get_logger

logger = get_logger(__name__)

# stdout é reservado à saída de máquina
console = Console(stderr=True)

EXIT_OK = 0
EXIT_FALSE = 1
EXIT_USAGE = 2
EXIT_EXHAUSTED = 3

_SHORTHANDS = ("cycle:", "path:", "complete:", "empty:")


class CommandConfig(BaseModel):
    """Pacote de opções de um subcomando, validado antes de qualquer cálculo."""

    model_config = ConfigDict(extra="forbid")

    subcommand: str
    g: Optional[str] = None
    h: Optional[str] = None
    map_path: Optional[str] = None
    oracle: Optional[str] = None
    state: Optional[str] = None
    out: Optional[str] = None
    fmt: str = "json"
    graph_output: bool = False
    seed: Optional[int] = Field(default=None, ge=0)
    cap: int = Field(default=1_000_000, ge=1)
    steps: Optional[int] = Field(default=None, ge=1)
    s: Optional[str] = None
    group_cap: int = Field(default=10 ** 6, ge=1)

    @field_validator("fmt")
    @classmethod
    def _known_format(cls, value: str) -> str:
        if value not in GRAPH_FORMATS:
            raise ValueError(f"formato desconhecido: {value}")
        return value

    @field_validator("s")
    @classmethod
    def _branch_spec(cls, value: Optional[str]) -> Optional[str]:
        if value is not None:
            BranchSpec.parse(value)
        return value

    @model_validator(mode="after")
    def _dot_only_for_graphs(self) -> "CommandConfig":
        if self.fmt == "dot" and not self.graph_output:
            raise ValueError("--format dot só vale para saídas que são grafos")
        return self

    @property
    def branch_spec(self) -> BranchSpec:
        if self.s is None:
            raise InvalidInputError("--s é obrigatório")
        return BranchSpec.parse(self.s)

    @classmethod
    def build(cls, ctx: click.Context, subcommand: str, **options: Any) -> "CommandConfig":
        """Completa as opções com as configurações carregadas e valida."""
        settings: Settings = ctx.obj["settings"] if ctx.obj else Settings()
        if options.get("cap") is None:
            options["cap"] = settings.cap
        if options.get("group_cap") is None:
            options["group_cap"] = settings.group_cap
        try:
            return cls(subcommand=subcommand, **options)
        except ValidationError as e:
            raise InvalidInputError(f"Opções inválidas para {subcommand}: {e.errors()[0]['msg']}")


def read_text(path: str) -> str:
    try:
        with open(path, "r", encoding="utf-8") as f:
            return f.read()
    except OSError as e:
        raise InvalidInputError(f"Não foi possível ler {path}: {e}")


def load_graph(source: Optional[str], option: str) -> Graph:
    """Lê um grafo de um arquivo JSON ou de uma forma curta (cycle:N, ...)."""
    if source is None:
        raise InvalidInputError(f"{option} é obrigatório")
    if source.startswith(_SHORTHANDS) and not os.path.exists(source):
        return graph_from_shorthand(source)
    return parse_graph(read_text(source))


def write_output(text: str, out: Optional[str] = None) -> None:
    """Escreve em --out ou no stdout."""
    if out:
        try:
            with open(out, "w", encoding="utf-8") as f:
                f.write(text)
        except OSError as e:
            raise InvalidInputError(f"Não foi possível escrever em {out}: {e}")
        console.print(f"✅ Resultado salvo em {out}")
    else:
        click.echo(text, nl=False)


def emit(document: Any, out: Optional[str] = None) -> None:
    write_output(emit_json(document), out)


def verdict(result: bool, reason: Optional[str] = None, **details: Any) -> int:
    """Emite {"result": ...} e devolve o código de saída correspondente."""
    document = {"result": result}
    if not result and reason is not None:
        document["reason"] = reason
    document.update(details)
    emit(document)
    return EXIT_OK if result else EXIT_FALSE


def exit_code_for(error: Exception) -> int:
    if isinstance(error, (SearchExhausted, GroupTooLarge, BranchSpecExhausted)):
        return EXIT_EXHAUSTED
    if isinstance(error, (InvariantViolation, ColourMapViolation)):
        return EXIT_FALSE
    if isinstance(
        error,
        (
            InvalidInputError,
            ConfigurationError,
            GraphMismatchError,
            SizeMismatchError,
            NotAHomomorphismError,
            MissingColourMap,
        ),
    ):
        return EXIT_USAGE
    return EXIT_FALSE


def handle_errors(func: Callable[..., Optional[int]]) -> Callable[..., None]:
    """
    Executa o comando e converte o resultado ou a exceção em código de saída:
    0 sucesso, 1 falso/não encontrado, 2 uso ou parsing, 3 orçamento esgotado.
    """

    @functools.wraps(func)
    def wrapper(*args: Any, **kwargs: Any) -> None:
        try:
            code = func(*args, **kwargs) or EXIT_OK
        except HomdistError as e:
            code = exit_code_for(e)
            logger.debug(f"{type(e).__name__}: {e}")
            console.print(f"❌ {type(e).__name__}: {e}")
        sys.exit(code)

    return wrapper
