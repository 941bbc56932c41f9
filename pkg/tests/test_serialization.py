#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Testes dos documentos JSON/DOT.
"""

import json

import pytest

from domain.construction import BranchSpec, gs_prefix, init_construction, verify_state
from domain.exceptions import GraphParseError, InvalidInputError, OracleSpecError
from domain.graphs import Graph, make_complete, make_cycle
from domain.homomorphisms import VertexMap
from domain.oracles import WitnessBudget, rado_oracle, random_bipartite_oracle, random_h_colourable_oracle
from infrastructure.serialization import (
    emit_graph,
    emit_map,
    emit_partial_hom,
    emit_state,
    oracle_from_spec,
    parse_graph,
    parse_map,
    parse_state,
    partial_hom_from_document,
)


def test_parse_k2():
    assert parse_graph('{"n": 2, "edges": [[0, 1]]}') == make_complete(2)


@pytest.mark.parametrize(
    "document, entry",
    [
        ({"n": 2, "edges": [[0, 0]]}, [0, 0]),
        ({"n": 2, "edges": [[0, 1], [0, 1]]}, [0, 1]),
        ({"n": 2, "edges": [[1, 0]]}, [1, 0]),
        ({"n": 2, "edges": [[0, 5]]}, [0, 5]),
    ],
)
def test_parse_errors_name_entry(document, entry):
    with pytest.raises(GraphParseError) as info:
        parse_graph(json.dumps(document))
    assert info.value.entry == entry


def test_parse_rejects_malformed_json():
    with pytest.raises(GraphParseError):
        parse_graph("{not json")
    with pytest.raises(GraphParseError):
        parse_graph('{"n": -1, "edges": []}')


@pytest.mark.parametrize(
    "text",
    [
        '{"n": 2, "edges": [["0", "1"]]}',
        '{"n": 2.0, "edges": [[0, 1]]}',
        '{"n": "2", "edges": [[0, 1]]}',
        '{"n": true, "edges": []}',
        '{"n": 2, "edges": [[0, 1.0]]}',
    ],
)
def test_parse_rejects_non_integer_fields(text):
    with pytest.raises(GraphParseError):
        parse_graph(text)


@pytest.mark.parametrize("text", ['{"map": ["1", 0.0]}', '{"map": [true, 0]}', '{"map": [1, "0"]}'])
def test_parse_map_rejects_non_integer_entries(text):
    with pytest.raises(GraphParseError):
        parse_map(text, make_complete(2), make_complete(2))


def test_oracle_and_state_reject_coerced_values():
    with pytest.raises(OracleSpecError):
        oracle_from_spec({"kind": "random-bipartite", "seed": "42"})
    with pytest.raises(OracleSpecError):
        oracle_from_spec({"kind": "random-bipartite", "seed": 42, "density_bits": 2.0})
    state = init_construction(rado_oracle(), BranchSpec.parse("odd"), WitnessBudget(500))
    document = json.loads(emit_state(state))
    document["t"] = "1"
    with pytest.raises(InvalidInputError):
        parse_state(json.dumps(document))


def test_json_round_trip_keeps_names():
    g = Graph.from_edges(3, [(0, 2)], names=["a", "b", "c"])
    text = emit_graph(g, "json")
    back = parse_graph(text)
    assert back == g and back.names == ("a", "b", "c")
    assert emit_graph(back, "json") == text


def test_dot_output():
    text = emit_graph(make_cycle(5), "dot")
    lines = text.strip().splitlines()
    assert lines[0] == "graph G {" and lines[-1] == "}"
    assert sum(" -- " in line for line in lines) == 5
    assert sum(line.strip().endswith(";") and " -- " not in line for line in lines) == 5
    assert "  0 -- 1;" in lines and "  0 -- 4;" in lines


def test_map_round_trip():
    c5, k3 = make_cycle(5), make_complete(3)
    f = VertexMap(c5, k3, (0, 1, 0, 1, 2))
    assert parse_map(emit_map(f), c5, k3) == f


@pytest.mark.parametrize(
    "oracle",
    [
        rado_oracle(),
        random_bipartite_oracle(7),
        random_bipartite_oracle(7, density_bits=2),
        random_h_colourable_oracle(make_cycle(5), 3),
    ],
)
def test_oracle_spec_round_trip(oracle):
    rebuilt = oracle_from_spec(oracle.spec())
    assert rebuilt.spec() == oracle.spec()
    assert all(rebuilt.adjacent(u, v) == oracle.adjacent(u, v) for u in range(20) for v in range(20))


def test_oracle_spec_errors():
    with pytest.raises(OracleSpecError):
        oracle_from_spec({"kind": "petersen"})
    with pytest.raises(OracleSpecError):
        oracle_from_spec({"kind": "random-bipartite"})
    with pytest.raises(OracleSpecError):
        oracle_from_spec({"kind": "random-h-colourable", "seed": 1, "h": {"n": 2, "edges": []}})


def test_state_round_trip():
    state = init_construction(rado_oracle(), BranchSpec.parse("odd"), WitnessBudget(500))
    document = json.loads(emit_state(state))
    assert document["root"] == 5
    assert document["good_pairs"] == [{"pair": [0, 1], "witness": 5}]
    assert document["oracle"] == {"kind": "rado-bit"}
    assert document["s"] == "odd"
    back = parse_state(json.dumps(document))
    assert back.tree == state.tree
    assert back.good_pairs == state.good_pairs
    assert back.status == state.status
    assert back.budget.cap == 500
    assert verify_state(back).ok


def test_partial_hom_round_trip(bipartite_run):
    gs = gs_prefix(bipartite_run, make_complete(2))
    back = partial_hom_from_document(json.loads(emit_partial_hom(gs)), make_complete(2))
    assert back.assignments == gs.assignments
