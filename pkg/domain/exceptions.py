#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Exceções personalizadas do homdist.
"""

from typing import Any, Dict, Optional, Tuple


class HomdistError(Exception):
    """Classe base para todas as exceções do homdist."""
    pass


class ConfigurationError(HomdistError):
    """Erro relacionado à configuração (arquivo inválido, chave desconhecida, etc.)."""
    pass


class InvalidInputError(HomdistError):
    """Erro de entrada inválida fornecida pelo usuário."""
    pass


class GraphParseError(InvalidInputError):
    """Documento de grafo (ou de mapa) malformado."""

    def __init__(self, message: str, entry: Optional[Any] = None):
        """
        Inicializa o erro de parsing.

        Args:
            message: Mensagem de erro
            entry: Entrada ofensiva do documento (opcional)
        """
        self.entry = entry
        if entry is not None:
            message = f"{message} (entrada: {entry!r})"
        super().__init__(message)


class BranchSpecError(InvalidInputError):
    """String da DSL de ramos inválida."""
    pass


class OracleSpecError(InvalidInputError):
    """Especificação de oráculo inválida."""
    pass


class GraphMismatchError(HomdistError):
    """Grafos incompatíveis (ex.: composição com contradomínio diferente do domínio)."""
    pass


class SizeMismatchError(HomdistError):
    """Permutação e mapa atuam sobre conjuntos de tamanhos diferentes."""
    pass


class NotAHomomorphismError(HomdistError):
    """O mapa fornecido não é um homomorfismo."""

    def __init__(self, message: str, edge: Optional[Tuple[int, int]] = None):
        self.edge = edge
        super().__init__(message)


class GroupTooLarge(HomdistError):
    """A ordem do grupo de automorfismos excede o limite configurado."""

    def __init__(self, cap: int):
        self.cap = cap
        super().__init__(f"Grupo de automorfismos excede o limite de {cap} elementos")


class SearchExhausted(HomdistError):
    """
    Orçamento de busca esgotado.

    Sinaliza o limite do orçamento, nunca a inexistência de testemunha.
    Quando levantada por um passo da construção, `state` guarda o estado
    anterior intacto para retomada com um orçamento maior.
    """

    def __init__(self, cap: int, message: Optional[str] = None, state: Optional[Any] = None):
        self.cap = cap
        self.state = state
        super().__init__(message or f"Busca de testemunha esgotou o orçamento (cap={cap})")


class AdjacentEndpoints(InvalidInputError):
    """Extremos distintos e adjacentes pedidos a uma busca de caminho c.e.c."""

    def __init__(self, u: int, v: int):
        self.u = u
        self.v = v
        super().__init__(f"Os vértices {u} e {v} são adjacentes")


class ConstructionError(HomdistError):
    """Erro durante a construção incremental."""
    pass


class BranchSpecExhausted(ConstructionError):
    """A especificação finita de ramos não possui mais comprimentos."""
    pass


class InvariantViolation(ConstructionError):
    """Um verificador encontrou invariantes violados."""

    def __init__(self, message: str, report: Optional[Dict[str, Any]] = None):
        self.report = report or {}
        super().__init__(message)


class MissingColourMap(ConstructionError):
    """O oráculo não carrega um mapa de cores para H."""
    pass


class ColourMapViolation(ConstructionError):
    """O mapa de cores do oráculo não preserva uma aresta da janela."""

    def __init__(self, edge: Tuple[int, int]):
        self.edge = edge
        super().__init__(f"O mapa de cores viola a aresta {edge}")
