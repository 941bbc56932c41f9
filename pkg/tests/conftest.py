#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Fixtures compartilhadas dos testes.
"""

import pytest

from domain.construction import BranchSpec, run
from domain.oracles import WitnessBudget, random_bipartite_oracle


@pytest.fixture(autouse=True)
def isolated_home(tmp_path, monkeypatch):
    """Configuração e logs num diretório temporário; nada de .env do repositório."""
    monkeypatch.setenv("HOMDIST_HOME", str(tmp_path / "home"))
    monkeypatch.setenv("HOMDIST_LOG_DIR", str(tmp_path / "logs"))
    for name in ("HOMDIST_CAP", "HOMDIST_GROUP_CAP", "HOMDIST_LOG_LEVEL"):
        monkeypatch.delenv(name, raising=False)
    monkeypatch.chdir(tmp_path)
    return tmp_path


@pytest.fixture(scope="session")
def bipartite_oracle():
    return random_bipartite_oracle(42)


@pytest.fixture(scope="session")
def bipartite_run(bipartite_oracle):
    """Construção sobre o bipartido aleatório (semente 42) até t = 3."""
    return run(bipartite_oracle, BranchSpec.parse("odd"), 3, WitnessBudget(1_000_000))
