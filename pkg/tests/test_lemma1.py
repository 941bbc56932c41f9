#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Testes da suíte de propriedades (subgrupo, invariância, coloração única, união).
"""

from domain.graphs import make_complete, make_cycle, make_path
from domain.homomorphisms import VertexMap
from domain.lemma_checks import (
    ITEM_AUT_INVARIANCE,
    ITEM_SUBGROUP,
    ITEM_UNION,
    ITEM_UNIQUE_COLOURABLE,
    LemmaCase,
    default_lemma1_corpus,
    lemma1_property_checks,
)


def test_default_corpus_size_and_bounds():
    corpus = default_lemma1_corpus()
    assert len(corpus) >= 30
    assert all(case.graph.n <= 8 for case in corpus)
    assert len({case.case_id for case in corpus}) == len(corpus)


def test_default_corpus_includes_fixations():
    fixations = {case.case_id: case for case in default_lemma1_corpus() if case.case_id.startswith("fix(")}
    assert set(fixations) == {"fix(P1)->C5#0", "fix(P2)->C5#0"}
    assert fixations["fix(P1)->C5#0"].graph.n == 7
    assert fixations["fix(P2)->C5#0"].graph.n == 8


def test_default_suite_passes():
    report = lemma1_property_checks()
    assert report.ok, report.failures()
    counts = report.items()
    for item in (ITEM_SUBGROUP, ITEM_AUT_INVARIANCE, ITEM_UNIQUE_COLOURABLE, ITEM_UNION):
        assert counts.get(item, 0) > 0
    keys = [(e["item"], e["case"]) for e in report.to_list()]
    assert keys == sorted(keys)


def test_report_entry_format():
    c5 = make_cycle(5)
    case = LemmaCase("C5->C5#id", c5, c5, VertexMap.identity(c5))
    report = lemma1_property_checks([case])
    entry = report.to_list()[0]
    assert set(entry) == {"item", "case", "pass", "witness"}
    assert entry["pass"] is True


def test_union_of_non_isomorphic_components():
    k2 = make_complete(2)
    p1 = LemmaCase("P1->K2", make_path(1), k2, VertexMap(make_path(1), k2, (0, 1)))
    p3 = LemmaCase("P3->K2", make_path(3), k2, VertexMap(make_path(3), k2, (0, 1, 0, 1)))
    report = lemma1_property_checks([p1, p3])
    unions = [e for e in report.entries if e.item == ITEM_UNION]
    assert len(unions) == 1 and unions[0].passed
