#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Módulo de configuração do homdist
"""

import json
import os
from typing import Any, Dict, Optional

from dotenv import load_dotenv
from pydantic import BaseModel, Field, ValidationError, field_validator

from domain.exceptions import ConfigurationError

_ENV_KEYS = {"cap": "HOMDIST_CAP", "group_cap": "HOMDIST_GROUP_CAP", "log_level": "HOMDIST_LOG_LEVEL"}
_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


class Settings(BaseModel):
    """Configuração efetiva: padrões, arquivo JSON e variáveis de ambiente."""

    cap: int = Field(default=1_000_000, ge=1)
    group_cap: int = Field(default=10 ** 6, ge=1)
    log_level: str = "INFO"

    @field_validator("log_level")
    @classmethod
    def _valid_level(cls, value: str) -> str:
        value = value.upper()
        if value not in _LEVELS:
            raise ValueError(f"nível de log inválido: {value}")
        return value


def _get_config_dir() -> str:
    return os.path.expanduser(os.environ.get("HOMDIST_HOME") or "~/.homdist")


def _get_config_file() -> str:
    """Retorna o caminho do arquivo de configuração"""
    config_dir = _get_config_dir()
    if not os.path.exists(config_dir):
        os.makedirs(config_dir)
    return os.path.join(config_dir, "config.json")


def _load_config() -> Dict[str, Any]:
    """Carrega a configuração do arquivo"""
    config_file = _get_config_file()
    if not os.path.exists(config_file):
        return {}

    try:
        with open(config_file, "r", encoding="utf-8") as f:
            data = json.load(f)
    except (OSError, json.JSONDecodeError) as e:
        raise ConfigurationError(f"Erro ao carregar configuração de {config_file}: {e}")
    if not isinstance(data, dict):
        raise ConfigurationError(f"Configuração em {config_file} precisa ser um objeto JSON")
    return data


def _save_config(config: Dict[str, Any]) -> None:
    """Salva a configuração no arquivo"""
    config_file = _get_config_file()
    try:
        with open(config_file, "w", encoding="utf-8") as f:
            json.dump(config, f, indent=2, sort_keys=True)
    except OSError as e:
        raise ConfigurationError(f"Erro ao salvar configuração: {e}")


def _from_environment() -> Dict[str, Any]:
    load_dotenv()
    values = {}
    for key, env_name in _ENV_KEYS.items():
        raw = os.environ.get(env_name)
        if raw not in (None, ""):
            values[key] = raw
    return values


def load_settings(**overrides: Optional[Any]) -> Settings:
    """
    Carrega as configurações por prioridade crescente: padrões, arquivo,
    ambiente (.env incluído) e argumentos explícitos não nulos.
    """
    merged: Dict[str, Any] = {}
    merged.update(_load_config())
    merged.update(_from_environment())
    merged.update({k: v for k, v in overrides.items() if v is not None})
    unknown = set(merged) - set(Settings.model_fields)
    if unknown:
        raise ConfigurationError(f"Chaves de configuração desconhecidas: {sorted(unknown)}")
    try:
        return Settings(**merged)
    except ValidationError as e:
        raise ConfigurationError(f"Configuração inválida: {e}")


def set_value(key: str, value: str) -> Settings:
    """Valida e persiste uma chave no arquivo de configuração."""
    if key not in Settings.model_fields:
        raise ConfigurationError(f"Chave desconhecida: {key}")
    config = _load_config()
    candidate = dict(config)
    candidate[key] = value
    try:
        validated = Settings(**candidate)
    except ValidationError as e:
        raise ConfigurationError(f"Valor inválido para {key}: {e}")
    config[key] = getattr(validated, key)
    _save_config(config)
    return validated


def stored_config() -> Dict[str, Any]:
    return _load_config()
