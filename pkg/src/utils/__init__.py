"""
Utilitários para o CLI homdist.
"""

from .logging import configure_logging

__all__ = ["configure_logging"] 