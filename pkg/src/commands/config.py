#!/usr/bin/env python
"""
Comandos de configuração persistente (~/.homdist/config.json).
"""

import click
from rich.table import Table

from infrastructure.config import load_settings, set_value, stored_config

from ..utils.logging import get_logger
from .common import console, emit, handle_errors

logger = get_logger(__name__)


@click.group("config")
def config_group():
    """Mostra ou altera a configuração."""


@config_group.command("show")
@handle_errors
def config_show():
    """Mostra a configuração efetiva."""
    settings = load_settings()
    stored = stored_config()
    table = Table(title="Configuração homdist")
    table.add_column("Chave")
    table.add_column("Valor")
    table.add_column("Origem")
    for key, value in settings.model_dump().items():
        table.add_row(key, str(value), "arquivo" if key in stored else "padrão/ambiente")
    console.print(table)
    emit(settings.model_dump())


@config_group.command("set")
@click.argument("key")
@click.argument("value")
@handle_errors
def config_set(key: str, value: str):
    """Define KEY = VALUE no arquivo de configuração."""
    settings = set_value(key, value)
    logger.info(f"Configuração {key} atualizada")
    console.print(f"✅ {key} = {getattr(settings, key)}")
