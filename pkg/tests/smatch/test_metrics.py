"""Tests for fine-grained metric views and score models."""

import pytest

from amrsmith.amr import parse_amr
from amrsmith.smatch import MetricKind, ScoreReport, bag_score, corpus_breakdown, fine_grained
from amrsmith.smatch.models import VariableMapping
from amrsmith.utils.errors import InvalidGraphError
from tests.samples import HEAT_WAVE_AMR


def test_score_report_derived_values():
    report = ScoreReport(3, 4, 6)
    assert report.precision == pytest.approx(0.75)
    assert report.recall == pytest.approx(0.5)
    assert report.f == pytest.approx(0.6)
    assert report.summary_line() == "P 0.7500 R 0.5000 F 0.6000"


def test_score_report_zero_totals():
    """Test empty sides give zeros instead of dividing by zero."""
    report = ScoreReport(0, 0, 0)
    assert (report.precision, report.recall, report.f) == (0.0, 0.0, 0.0)


def test_score_report_combine():
    total = ScoreReport.combine([ScoreReport(1, 2, 3), ScoreReport(4, 5, 6)])
    assert total == ScoreReport(5, 7, 9)


def test_variable_mapping_must_be_injective():
    with pytest.raises(InvalidGraphError):
        VariableMapping({"a": "x", "b": "x"})


def test_metric_titles():
    assert MetricKind.NO_WSD.title == "No WSD"
    assert MetricKind("named-entities") is MetricKind.NAMED_ENTITIES


def test_bag_score_counts_multiset_overlap():
    report = bag_score(["a", "a", "b"], ["a", "b", "b", "c"])
    assert report == ScoreReport(2, 3, 4)


def test_no_wsd_ignores_sense_numbers():
    pred = parse_amr("(w / want-01 :ARG0 (b / boy))")
    gold = parse_amr("(w / want-02 :ARG0 (b / boy))")

    assert fine_grained(pred, gold, MetricKind.SMATCH).f < 1.0
    assert fine_grained(pred, gold, MetricKind.NO_WSD).f == 1.0


def test_unlabeled_ignores_relation_names():
    pred = parse_amr("(w / want-01 :ARG0 (b / boy))")
    gold = parse_amr("(w / want-01 :ARG1 (b / boy))")

    assert fine_grained(pred, gold, MetricKind.UNLABELED).f == 1.0


def test_concepts_scored_as_bag():
    pred = parse_amr("(w / want-01 :ARG0 (b / boy))")
    gold = parse_amr("(w / want-01 :ARG0 (g / girl))")

    assert fine_grained(pred, gold, MetricKind.CONCEPTS) == ScoreReport(1, 2, 2)


def test_wikification_view():
    pred = parse_amr('(c / country :wiki "France" :name (n / name :op1 "France"))')
    gold = parse_amr('(c / country :wiki "Germany" :name (n / name :op1 "France"))')

    assert fine_grained(pred, gold, MetricKind.WIKIFICATION) == ScoreReport(0, 1, 1)
    assert fine_grained(gold, gold, MetricKind.WIKIFICATION) == ScoreReport(1, 1, 1)


def test_wikification_without_links():
    """Test graphs without :wiki score zero without failing."""
    graph = parse_amr("(b / boy)")
    assert fine_grained(graph, graph, MetricKind.WIKIFICATION).f == 0.0


def test_named_entity_view():
    """Test only entity concepts and name ops count."""
    pred = parse_amr('(c / city :name (n / name :op1 "Paris") :mod (b / big))')
    gold = parse_amr('(c / city :name (n / name :op1 "Paris") :mod (s / small))')

    assert fine_grained(pred, gold, MetricKind.NAMED_ENTITIES) == ScoreReport(2, 2, 2)


def test_negation_view():
    pred = parse_amr("(g / go-02 :polarity - :ARG0 (b / boy))")
    gold = parse_amr("(g / go-02 :ARG0 (b / boy))")

    report = fine_grained(pred, gold, MetricKind.NEGATIONS)
    assert (report.matched, report.pred_total, report.gold_total) == (0, 1, 0)


def test_negation_view_ignores_negated_concepts():
    pred = parse_amr("(a / want-01 :polarity -)")
    gold = parse_amr("(b / like-01 :polarity -)")

    assert fine_grained(pred, gold, MetricKind.NEGATIONS) == ScoreReport(1, 1, 1)
    assert fine_grained(pred, gold, MetricKind.NEGATIONS).f == 1.0


def test_reentrancy_view():
    graph = parse_amr(HEAT_WAVE_AMR)
    report = fine_grained(graph, graph, MetricKind.REENTRANCY)

    # Three edges end at p: those relations plus the instances of a, p, s and h
    assert report.pred_total == 7
    assert report.f == 1.0


def test_srl_view():
    pred = parse_amr("(w / want-01 :ARG0 (b / boy) :time (n / now))")
    gold = parse_amr("(w / want-01 :ARG0 (b / boy))")

    assert fine_grained(pred, gold, MetricKind.SRL).f == 1.0


def test_corpus_breakdown_all_views():
    graph = parse_amr(HEAT_WAVE_AMR)
    table = corpus_breakdown([graph], [graph])

    assert list(table) == list(MetricKind)
    assert table[MetricKind.SMATCH].f == 1.0
    assert table[MetricKind.CONCEPTS] == ScoreReport(8, 8, 8)


def test_corpus_breakdown_selected_views():
    graph = parse_amr(HEAT_WAVE_AMR)
    table = corpus_breakdown([graph], [graph], metrics=[MetricKind.SRL])
    assert list(table) == [MetricKind.SRL]
