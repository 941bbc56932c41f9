#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Configuração de logging do homdist
"""

import logging
import os
from logging.handlers import RotatingFileHandler

from rich.console import Console
from rich.logging import RichHandler


def log_dir() -> str:
    """Diretório de logs (HOMDIST_LOG_DIR ou ~/.homdist/logs)."""
    override = os.environ.get("HOMDIST_LOG_DIR")
    if override:
        return os.path.expanduser(override)
    home = os.path.expanduser(os.environ.get("HOMDIST_HOME") or "~/.homdist")
    return os.path.join(home, "logs")


def log_file() -> str:
    return os.path.join(log_dir(), "homdist.log")


def ensure_directories_exist():
    """Garante que os diretórios necessários existam."""
    os.makedirs(log_dir(), exist_ok=True)


def _installed(root: logging.Logger, kind: type):
    for handler in root.handlers:
        if isinstance(handler, kind) and getattr(handler, "_homdist", False):
            return handler
    return None


def configure_logging(level=logging.INFO):
    """Configura o sistema de logging.

    Console em stderr (stdout fica só com a saída de máquina) e arquivo
    rotativo. Chamadas repetidas apenas ajustam os níveis.

    Args:
        level: Nível de logging (padrão: logging.INFO)
    """
    if isinstance(level, str):
        level = logging.getLevelName(level.upper())
    root_logger = logging.getLogger()
    root_logger.setLevel(level)

    if _installed(root_logger, RichHandler) is None:
        console_handler = RichHandler(console=Console(stderr=True), rich_tracebacks=True, show_path=False)
        console_handler._homdist = True
        root_logger.addHandler(console_handler)

        ensure_directories_exist()
        file_handler = RotatingFileHandler(
            log_file(),
            maxBytes=10 * 1024 * 1024,  # 10 MB
            backupCount=5,
            encoding="utf-8",
        )
        file_handler.setFormatter(
            logging.Formatter("%(asctime)s - %(name)s - %(levelname)s - %(message)s", "%Y-%m-%d %H:%M:%S")
        )
        file_handler._homdist = True
        root_logger.addHandler(file_handler)
        logging.getLogger(__name__).debug(f"Sistema de logging configurado. Arquivo de log: {log_file()}")

    definir_nivel_log(level)
    return root_logger


def get_logger(name):
    """Obtém um logger configurado.

    Args:
        name: Nome do logger

    Returns:
        logging.Logger: Logger configurado
    """
    return logging.getLogger(name)


# Alias para manter compatibilidade
obter_logger = get_logger


def definir_nivel_log(nivel):
    """
    Define o nível de log para o logger raiz e seus manipuladores.

    Args:
        nivel: Nível de log (logging.DEBUG, logging.INFO, etc.)
    """
    root_logger = logging.getLogger()
    root_logger.setLevel(nivel)
    for handler in root_logger.handlers:
        if getattr(handler, "_homdist", False):
            handler.setLevel(nivel)
    return True
