"""Tests for the full postprocessing pipeline and its corpus driver."""

import random

from amrsmith.amr import Layout, parse_amr, serialize_amr, to_triples
from amrsmith.postprocess import (
    Gazetteer,
    PostprocessOptions,
    PruneMethod,
    Stage,
    fallback_graph,
    pipeline,
    postprocess_lines,
    summarize,
    write_log,
)
from tests.samples import OPIUM_SPREAD

FRANCE_LINE = '(country :name (name :op1 "France"))'


class ExplodingBackend:
    def lookup(self, name):
        raise RuntimeError("boom")


def _line(graph):
    return serialize_amr(graph, Layout.SINGLE_LINE)


def test_pipeline_runs_every_stage():
    result = pipeline(OPIUM_SPREAD, backend=Gazetteer())

    assert result.repaired_text == OPIUM_SPREAD
    assert _line(result.graph) == (
        "(m / material :mod (r / raw) :domain (o / opium :mod r) "
        ":ARG1-of (u / use-01 :ARG2 (m2 / make-01 :ARG1 (h / heroin) :ARG2 o)))"
    )
    assert [entry.to_row() for entry in result.entries(Stage.PRUNE)] == ["0\tprune\tremoved\t:mod (raw) at 0.2.0.1"]
    assert [entry.detail for entry in result.entries(Stage.COREF)] == ["r2 -> r", "o2 -> o"]
    assert result.pruned_nodes == 1


def test_pipeline_stage_switches():
    options = PostprocessOptions(prune=PruneMethod.NONE, coref=False)
    result = pipeline(OPIUM_SPREAD, options)

    assert result.log == []
    assert len(result.graph.instances) == 9


def test_pipeline_wikifies_with_backend():
    result = pipeline(FRANCE_LINE, backend=Gazetteer({"France": "France"}), line_index=4)

    assert _line(result.graph) == '(c / country :wiki "France" :name (n / name :op1 "France"))'
    assert [entry.to_row() for entry in result.entries(Stage.WIKIFY)] == ["4\twikify\tlinked\tc France -> France"]


def test_pipeline_falls_back_on_stage_failure():
    """Test an unexpected failure gives the empty AMR instead of raising."""
    result = pipeline(FRANCE_LINE, backend=ExplodingBackend(), line_index=2)

    assert result.graph == fallback_graph()
    assert _line(result.graph) == "(a / amr-empty)"
    assert result.log[-1].stage is Stage.FALLBACK
    assert result.log[-1].detail == "wikify: boom"


def test_pipeline_repairs_broken_line():
    result = pipeline("(a :b (c", line_index=1)

    assert _line(result.graph) == "(a / a :b (c / c))"
    assert len(result.entries(Stage.REPAIR)) == 2


def test_postprocess_lines_in_order():
    lines = [FRANCE_LINE, "", "(a :b (c", OPIUM_SPREAD]

    results = postprocess_lines(lines, backend=Gazetteer({"France": "France"}))

    assert [r.graph.concept(r.graph.top) for r in results] == ["country", "amr-empty", "a", "material"]
    assert summarize(results) == {
        "lines": 4,
        "repaired": 2,
        "nodes_pruned": 1,
        "amrs_pruned": 1,
        "coref_merges": 2,
        "wiki_links": 1,
        "fallbacks": 0,
    }


def test_postprocess_lines_parallel_matches_serial():
    lines = [FRANCE_LINE, "(a :b (c", OPIUM_SPREAD]

    serial = postprocess_lines(lines, jobs=1)
    parallel = postprocess_lines(lines, jobs=2)

    assert [r.graph for r in parallel] == [r.graph for r in serial]
    assert [r.log for r in parallel] == [r.log for r in serial]


def test_postprocess_lines_backend_failure_is_per_line():
    results = postprocess_lines([FRANCE_LINE, "(b :mod (c))"], backend=ExplodingBackend())

    assert results[0].graph == fallback_graph()
    assert _line(results[1].graph) == "(b / b :mod (c / c))"
    assert summarize(results)["fallbacks"] == 1


def test_write_log(tmp_path):
    results = postprocess_lines(["(a :b (c", OPIUM_SPREAD])
    path = tmp_path / "post.log"

    rows = write_log(results, path)

    lines = path.read_text(encoding="utf-8").splitlines()
    assert rows == len(lines) == 5
    assert lines[0] == "0\trepair\tappended missing )\t"
    assert lines[2].startswith("1\tprune\tremoved\t")


def _random_output(rng):
    """Model output made of structure characters, letters and arbitrary bytes."""
    size = rng.randint(0, 40)
    if rng.random() < 0.5:
        return bytes(rng.randrange(256) for _ in range(size))
    return bytes(rng.choice(b'()":/~ abc0\x0e\xff') for _ in range(size))


def test_pipeline_output_always_reads_back():
    rng = random.Random(11)
    for _ in range(10_000):
        raw = _random_output(rng)
        result = pipeline(raw)

        assert not result.entries(Stage.FALLBACK), raw
        text = serialize_amr(result.graph, Layout.SINGLE_LINE)
        assert to_triples(parse_amr(text)).multiset() == to_triples(result.graph).multiset(), raw
