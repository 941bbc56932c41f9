"""
Utilitários de configuração de logging para o CLI homdist.
"""

import logging

from infrastructure.logging_config import configure_logging as _configure_infrastructure


def get_logger(name):
    """Retorna um logger configurado para o módulo especificado."""
    return logging.getLogger(name)


def configure_logging(level="INFO"):
    """Configura o sistema de logging global (console em stderr e arquivo rotativo)."""
    _configure_infrastructure(level)
    logging.getLogger(__name__).debug("Sistema de logging configurado")
