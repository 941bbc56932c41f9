#!/usr/bin/env python
"""
CLI principal do homdist: homomorfismos, simetrias e a construção
incremental sobre oráculos.
"""

import sys
from typing import Optional

import click
from dotenv import load_dotenv

from domain.exceptions import ConfigurationError
from infrastructure.config import load_settings

from .commands.cec import cec_group
from .commands.common import EXIT_USAGE, console
from .commands.config import config_group
from .commands.construct import construct_group, gs_group
from .commands.lemma import lemma1_group
from .commands.solve import (
    aut_group,
    core_group,
    dist_group,
    fixation_cmd,
    graph_group,
    hom_group,
    invariant_cmd,
    unique_group,
)
from .utils.logging import configure_logging, get_logger

logger = get_logger(__name__)

# Carregar variáveis de ambiente
load_dotenv()


@click.group()
@click.option("--log-level", help="Nível de log (DEBUG, INFO, WARNING, ...)")
@click.pass_context
def cli(ctx, log_level: Optional[str] = None):
    """Homomorfismos distintivos: resolvedores exatos e construção sobre oráculos."""
    try:
        settings = load_settings(log_level=log_level)
    except ConfigurationError as e:
        console.print(f"❌ {e}")
        sys.exit(EXIT_USAGE)
    configure_logging(settings.log_level)
    ctx.ensure_object(dict)
    ctx.obj["settings"] = settings
    logger.debug(f"CLI iniciada com {settings.model_dump()}")


for command in (
    hom_group,
    dist_group,
    aut_group,
    invariant_cmd,
    core_group,
    unique_group,
    fixation_cmd,
    lemma1_group,
    cec_group,
    construct_group,
    gs_group,
    graph_group,
    config_group,
):
    cli.add_command(command)


if __name__ == "__main__":
    cli()
