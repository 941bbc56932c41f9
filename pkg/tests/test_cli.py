#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Testes da CLI: saída de máquina no stdout e códigos de saída 0/1/2/3.
"""

import json

import pytest
from click.testing import CliRunner

from src.__main__ import cli


@pytest.fixture
def runner():
    return CliRunner()


@pytest.fixture
def rado_file(tmp_path):
    path = tmp_path / "rado.json"
    path.write_text(json.dumps({"kind": "rado-bit"}), encoding="utf-8")
    return str(path)


def test_graph_emit_dot(runner):
    result = runner.invoke(cli, ["graph", "emit", "--g", "cycle:5", "--format", "dot"])
    assert result.exit_code == 0
    lines = result.stdout.strip().splitlines()
    assert lines[0] == "graph G {"
    assert sum(" -- " in line for line in lines) == 5


def test_fixation_dot(runner, tmp_path):
    map_file = tmp_path / "map.json"
    map_file.write_text(json.dumps({"map": [0, 1]}), encoding="utf-8")
    args = ["fixation", "--g", "path:1", "--h", "complete:2", "--map", str(map_file), "--format", "dot"]
    result = runner.invoke(cli, args)
    assert result.exit_code == 0
    assert sum(" -- " in line for line in result.stdout.splitlines()) == 4


def test_unknown_format_is_usage_error(runner):
    result = runner.invoke(cli, ["graph", "emit", "--g", "cycle:3", "--format", "svg"])
    assert result.exit_code == 2


def test_unwritable_out_is_usage_error(runner, tmp_path):
    target = tmp_path / "nao_existe" / "x.json"
    result = runner.invoke(cli, ["graph", "emit", "--g", "cycle:3", "--out", str(target)])
    assert result.exit_code == 2
    assert not target.exists()


def test_invariant_prints_integer(runner):
    result = runner.invoke(cli, ["invariant", "chi-d", "--g", "cycle:4"])
    assert result.exit_code == 0
    assert result.stdout.strip() == "4"
    result = runner.invoke(cli, ["invariant", "chi", "--g", "cycle:5"])
    assert result.stdout.strip() == "3"


def test_dist_search_finds_map(runner):
    result = runner.invoke(cli, ["dist", "search", "--g", "cycle:7", "--h", "cycle:5"])
    assert result.exit_code == 0
    assert len(json.loads(result.stdout)["map"]) == 7


def test_hom_find_reports_absence(runner):
    result = runner.invoke(cli, ["hom", "find", "--g", "cycle:5", "--h", "complete:2"])
    assert result.exit_code == 1
    assert json.loads(result.stdout) == {"result": False, "reason": "no-homomorphism"}


def test_hom_check_names_edge(runner, tmp_path):
    map_file = tmp_path / "map.json"
    map_file.write_text(json.dumps({"map": [0, 0]}), encoding="utf-8")
    result = runner.invoke(cli, ["hom", "check", "--g", "path:1", "--h", "complete:2", "--map", str(map_file)])
    assert result.exit_code == 1
    assert json.loads(result.stdout)["edge"] == [0, 1]


def test_bad_graph_file_is_usage_error(runner, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"n": 2, "edges": [[0, 0]]}), encoding="utf-8")
    result = runner.invoke(cli, ["hom", "find", "--g", str(bad), "--h", "complete:2"])
    assert result.exit_code == 2
    assert result.stdout == ""


def test_enumerate_count(runner):
    result = runner.invoke(cli, ["hom", "enumerate", "--g", "cycle:7", "--h", "cycle:5", "--count-only"])
    assert result.exit_code == 0
    assert json.loads(result.stdout) == {"count": 70}


def test_aut_group_cap_exhausted(runner):
    result = runner.invoke(cli, ["aut", "group", "--g", "cycle:5", "--group-cap", "5"])
    assert result.exit_code == 3
    result = runner.invoke(cli, ["aut", "group", "--g", "cycle:5"])
    assert json.loads(result.stdout)["order"] == 10


def test_cec_witness(runner, rado_file):
    result = runner.invoke(cli, ["cec", "witness", "--oracle", rado_file, "--u", "0", "--v", "2", "--avoid", "1"])
    assert result.exit_code == 0
    assert json.loads(result.stdout) == {"path": [0, 5, 2]}
    result = runner.invoke(cli, ["cec", "witness", "--oracle", rado_file, "--u", "0", "--v", "1"])
    assert result.exit_code == 2


def test_cec_bounded_check(runner):
    result = runner.invoke(cli, ["cec", "bounded-check", "--g", "cycle:5", "--t-max", "0"])
    assert result.exit_code == 0
    result = runner.invoke(cli, ["cec", "bounded-check", "--g", "cycle:5", "--t-max", "1"])
    assert result.exit_code == 1


def test_construct_run_and_verify(runner, rado_file, tmp_path):
    state_file = tmp_path / "state.json"
    result = runner.invoke(
        cli, ["construct", "run", "--oracle", rado_file, "--s", "odd", "--steps", "1", "--out", str(state_file)]
    )
    assert result.exit_code == 0
    document = json.loads(state_file.read_text(encoding="utf-8"))
    assert document["t"] == 1 and document["root"] == 5

    result = runner.invoke(cli, ["construct", "verify", "--state", str(state_file)])
    assert result.exit_code == 0
    assert json.loads(result.stdout)["ok"] is True

    result = runner.invoke(cli, ["gs", "emit", "--state", str(state_file)])
    assert result.exit_code == 2


def test_construct_exhaustion_saves_partial_state(runner, rado_file, tmp_path):
    partial = tmp_path / "partial.json"
    result = runner.invoke(
        cli,
        ["construct", "run", "--oracle", rado_file, "--s", "odd", "--steps", "2", "--cap", "2000", "--out", str(partial)],
    )
    assert result.exit_code == 3
    document = json.loads(partial.read_text(encoding="utf-8"))
    assert document["t"] == 1
    assert document["cap"] == 2000


def test_invalid_branch_spec(runner, rado_file):
    result = runner.invoke(cli, ["construct", "run", "--oracle", rado_file, "--s", "prime", "--steps", "1"])
    assert result.exit_code == 2


def test_config_set_and_show(runner):
    result = runner.invoke(cli, ["config", "set", "cap", "5000"])
    assert result.exit_code == 0
    result = runner.invoke(cli, ["config", "show"])
    assert result.exit_code == 0
    assert json.loads(result.stdout)["cap"] == 5000
    result = runner.invoke(cli, ["config", "set", "cap", "zero"])
    assert result.exit_code == 2


def test_invalid_log_level_is_usage_error(runner):
    result = runner.invoke(cli, ["--log-level", "LOUD", "graph", "emit", "--g", "cycle:3"])
    assert result.exit_code == 2


def test_lemma_suite(runner):
    result = runner.invoke(cli, ["lemma1", "run-suite"])
    assert result.exit_code == 0
    entries = json.loads(result.stdout)
    assert entries and all(entry["pass"] for entry in entries)
