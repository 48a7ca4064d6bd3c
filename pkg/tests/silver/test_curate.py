"""Tests for end-to-end silver curation."""

import io
import json

import pytest

from amrsmith.amr import iter_blocks, load_corpus
from amrsmith.silver import MixSpec, build_candidates, curate, write_report, write_silver_corpus
from amrsmith.silver.curate import histogram_bin
from amrsmith.utils.errors import AlignmentMismatchError

CAMR = """# ::snt The boy wants to go .
(w / want-01 :ARG0 (b / boy) :ARG1 (g / go-02 :ARG0 b))

# ::snt Broken .
(a / boy

# ::snt Empty edge .
(a / want-01 :ARG0 (b / boy))

# ::snt Disagreement .
(a / x)
"""

JAMR = """# ::snt ignored
(x / want-01 :ARG0 (y / boy) :ARG1 (z / go-02 :ARG0 y))

(a / boy)

(a / want-01 :null-edge (b / boy))

(b / y)
"""


@pytest.fixture
def parser_outputs(tmp_path):
    camr = tmp_path / "camr.amr"
    jamr = tmp_path / "jamr.amr"
    camr.write_text(CAMR, encoding="utf-8")
    jamr.write_text(JAMR, encoding="utf-8")
    return camr, jamr


def test_curate_counts_every_decision(parser_outputs):
    result = curate(*parser_outputs, MixSpec(total=1, camr_fraction=1.0))
    report = result.report

    assert report.total == 4
    assert report.dropped == {"invalid": 1, "null-tag": 0, "null-edge": 1, "low-agreement": 1}
    assert report.kept == 1
    assert report.mixed == {"camr": 1, "jamr": 0}
    assert report.histogram[19] == 1
    assert report.histogram[10] == 1
    assert sum(report.histogram) == 2


def test_curated_record_uses_camr_sentence(parser_outputs):
    result = curate(*parser_outputs, MixSpec(total=1, camr_fraction=1.0))

    [record] = result.records
    assert record.sentence == "The boy wants to go ."
    assert record.graph.top == "w"


def test_jamr_share_takes_jamr_parse(parser_outputs):
    [record] = curate(*parser_outputs, MixSpec(total=1, camr_fraction=0.0)).records
    assert record.graph.top == "x"


def test_inclusive_threshold_keeps_boundary(parser_outputs):
    result = curate(*parser_outputs, MixSpec(total=2), threshold=50.0, inclusive=True)

    assert result.report.kept == 2
    assert result.report.dropped["low-agreement"] == 0


def test_mismatched_outputs(tmp_path, parser_outputs):
    camr, _ = parser_outputs
    short = tmp_path / "short.amr"
    short.write_text("(a / boy)\n", encoding="utf-8")

    with pytest.raises(AlignmentMismatchError) as exc_info:
        curate(camr, short, MixSpec(total=1))

    assert exc_info.value.code == "silver_alignment_mismatch"
    assert exc_info.value.details == {"camr_count": 4, "jamr_count": 1}


def test_empty_outputs_give_empty_corpus(tmp_path):
    camr = tmp_path / "camr.amr"
    jamr = tmp_path / "jamr.amr"
    camr.write_text("", encoding="utf-8")
    jamr.write_text("", encoding="utf-8")

    result = curate(camr, jamr, MixSpec(total=0))

    assert result.records == []
    assert result.report.total == 0


def test_sentence_falls_back_to_jamr():
    camr = list(iter_blocks(io.StringIO("(a / boy)\n")))
    jamr = list(iter_blocks(io.StringIO("# ::snt A boy .\n(b / boy)\n")))

    [candidate] = build_candidates(camr, jamr)
    assert candidate.sentence == "A boy ."
    assert candidate.camr.valid and candidate.jamr.valid


def test_write_silver_corpus(tmp_path, parser_outputs):
    result = curate(*parser_outputs, MixSpec(total=1))
    path = tmp_path / "silver.amr"

    assert write_silver_corpus(result.records, path) == 1

    graphs, errors = load_corpus(path)
    assert errors == []
    assert graphs[0].metadata == {"snt": "The boy wants to go .", "source": "camr"}


def test_write_report(tmp_path, parser_outputs):
    result = curate(*parser_outputs, MixSpec(total=1))
    path = tmp_path / "report.json"

    write_report(result.report, path)

    data = json.loads(path.read_text(encoding="utf-8"))
    assert data["kept"] == 1
    assert data["threshold"] == 55.0
    assert data["inclusive"] is False
    assert data["histogram"]["bin_width"] == 5.0
    assert len(data["histogram"]["counts"]) == 20


@pytest.mark.parametrize("score,expected", [(0.0, 0), (4.99, 0), (5.0, 1), (54.9, 10), (99.9, 19), (100.0, 19)])
def test_histogram_bins(score, expected):
    assert histogram_bin(score) == expected
