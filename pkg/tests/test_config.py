#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Testes da configuração (arquivo, ambiente, argumentos) e do logging.
"""

import json
import logging
import os

import pytest

from domain.exceptions import ConfigurationError
from infrastructure.config import load_settings, set_value, stored_config
from infrastructure.logging_config import configure_logging, log_file


def test_defaults():
    settings = load_settings()
    assert settings.cap == 1_000_000
    assert settings.group_cap == 10 ** 6
    assert settings.log_level == "INFO"


def test_precedence(monkeypatch):
    set_value("cap", "10")
    assert load_settings().cap == 10
    monkeypatch.setenv("HOMDIST_CAP", "20")
    assert load_settings().cap == 20
    assert load_settings(cap=30).cap == 30
    assert load_settings(cap=None).cap == 20


def test_set_value_persists_validated_value():
    settings = set_value("log_level", "debug")
    assert settings.log_level == "DEBUG"
    assert stored_config() == {"log_level": "DEBUG"}
    path = os.path.join(os.environ["HOMDIST_HOME"], "config.json")
    with open(path, encoding="utf-8") as f:
        assert json.load(f) == {"log_level": "DEBUG"}


@pytest.mark.parametrize("key, value", [("cap", "0"), ("cap", "muitos"), ("log_level", "LOUD"), ("colour", "1")])
def test_invalid_values(key, value):
    with pytest.raises(ConfigurationError):
        set_value(key, value)


def test_invalid_environment(monkeypatch):
    monkeypatch.setenv("HOMDIST_GROUP_CAP", "-1")
    with pytest.raises(ConfigurationError):
        load_settings()


def test_corrupt_config_file():
    home = os.environ["HOMDIST_HOME"]
    os.makedirs(home, exist_ok=True)
    with open(os.path.join(home, "config.json"), "w", encoding="utf-8") as f:
        f.write("[1, 2")
    with pytest.raises(ConfigurationError):
        load_settings()


def test_unknown_stored_key():
    home = os.environ["HOMDIST_HOME"]
    os.makedirs(home, exist_ok=True)
    with open(os.path.join(home, "config.json"), "w", encoding="utf-8") as f:
        json.dump({"jobs": 4}, f)
    with pytest.raises(ConfigurationError):
        load_settings()


def test_configure_logging_is_idempotent():
    root = configure_logging("DEBUG")
    configure_logging("WARNING")
    ours = [h for h in root.handlers if getattr(h, "_homdist", False)]
    assert len(ours) == 2
    assert root.level == logging.WARNING
    assert all(h.level == logging.WARNING for h in ours)
    assert log_file().endswith("homdist.log")
