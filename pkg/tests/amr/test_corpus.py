"""Tests for corpus reading and writing."""

import io

from amrsmith.amr import Layout, iter_blocks, load_corpus, parse_amr, read_corpus, write_corpus

CORPUS = """# AMR release (generated on 2016-01-01)

# ::id 1
# ::snt Hello .
(h / hello)

# ::id 2
(c / see-01 :ARG0 x)


# ::id 3
(b / boy)
"""


def test_header_block_takes_no_index():
    """Test blocks without AMR text are skipped."""
    blocks = list(iter_blocks(io.StringIO(CORPUS)))

    assert [b.index for b in blocks] == [0, 1, 2]
    assert [b.start_line for b in blocks] == [3, 7, 11]
    assert blocks[0].metadata == {"id": "1", "snt": "Hello ."}
    assert blocks[0].amr_text == "(h / hello)"


def test_malformed_block_skipped_with_file_line():
    """Test a bad block is reported with its file line and the rest is read."""
    errors = []
    graphs = list(read_corpus(io.StringIO(CORPUS), errors))

    assert [g.metadata["id"] for g in graphs] == ["1", "3"]
    assert len(errors) == 1
    assert errors[0].block_index == 1
    assert errors[0].line == 8
    assert errors[0].error.code == "amr_undefined_variable"
    assert "block 1 (line 8)" in str(errors[0])


def test_load_corpus(tmp_path):
    path = tmp_path / "corpus.amr"
    path.write_text(CORPUS, encoding="utf-8")

    graphs, errors = load_corpus(path)

    assert len(graphs) == 2
    assert len(errors) == 1


def test_crlf_lines_accepted():
    """Test Windows line endings read like Unix ones."""
    text = "# ::id 1\r\n(h / hello)\r\n\r\n(b / boy)\r\n"
    graphs = list(read_corpus(io.StringIO(text)))
    assert [g.top for g in graphs] == ["h", "b"]


def test_write_corpus_round_trip():
    """Test written records read back equal, metadata included."""
    graphs = [parse_amr("# ::id 1\n(h / hello)"), parse_amr("# ::id 2\n(b / boy :mod (l / little))")]
    out = io.StringIO()

    count = write_corpus(graphs, out, Layout.SINGLE_LINE)

    assert count == 2
    assert out.getvalue() == "# ::id 1\n(h / hello)\n\n# ::id 2\n(b / boy :mod (l / little))\n"
    again = list(read_corpus(io.StringIO(out.getvalue())))
    assert again == graphs
    assert again[1].metadata == {"id": "2"}
