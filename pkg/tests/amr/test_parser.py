"""Tests for the PENMAN parser."""

import pytest

from amrsmith.amr import AmrGraph, Const, ConstKind, Edge, Var, parse_amr
from amrsmith.utils.errors import (
    AmrSyntaxError,
    DanglingRelationError,
    DuplicateVariableDefinitionError,
    InvalidGraphError,
    MissingConceptError,
    UnbalancedParensError,
    UndefinedVariableReferenceError,
    UnterminatedStringError,
)
from tests.samples import BOY_WANTS_AMR


def test_parse_simple_graph():
    """Test variables, concepts and edges in surface order."""
    graph = parse_amr(BOY_WANTS_AMR)

    assert graph.top == "w"
    assert graph.instances == {"w": "want-01", "b": "boy", "g": "go-02"}
    assert [(e.source, e.relation) for e in graph.edges] == [
        ("w", ":ARG0"),
        ("w", ":ARG1"),
        ("g", ":ARG0"),
    ]
    assert graph.edges[2].target == Var("b")
    assert graph.edges[2].inline is False
    assert graph.edges[0].inline is True


def test_reentrancy_detected():
    """Test a variable referenced twice is reported as re-entrant."""
    graph = parse_amr(BOY_WANTS_AMR)
    assert graph.reentrancies() == ["b"]


def test_forward_reference_resolves():
    """Test a bare reference may precede the variable's definition."""
    graph = parse_amr("(a / b :ARG0 c :ARG1 (c / d))")
    assert graph.edges[0].target == Var("c")


@pytest.mark.parametrize(
    "value,literal,kind",
    [
        ("-", "-", ConstKind.SYMBOL),
        ("+", "+", ConstKind.SYMBOL),
        ("imperative", "imperative", ConstKind.SYMBOL),
        ("1", "1", ConstKind.NUMBER),
        ("2.5", "2.5", ConstKind.NUMBER),
        ('"Smith"', "Smith", ConstKind.QUOTED),
        ("Smith", "Smith", ConstKind.SYMBOL),
    ],
)
def test_constant_values(value, literal, kind):
    """Test bare and quoted values resolve to constants."""
    graph = parse_amr(f"(a / thing :mod {value})")
    assert graph.edges[0].target == Const(literal, kind)
    assert graph.edges[0].is_attribute


def test_metadata_parsed():
    """Test `# ::key value` lines, several pairs on one line."""
    graph = parse_amr("# ::id doc.1 ::date 2016-01-01\n# ::snt Hello world\n(h / hello)")
    assert graph.metadata == {"id": "doc.1", "date": "2016-01-01", "snt": "Hello world"}


def test_plain_comment_lines_ignored():
    """Test comment lines without `::` carry no metadata."""
    graph = parse_amr("# just a note\n(h / hello)")
    assert graph.metadata == {}


def test_equality_ignores_metadata():
    """Test graphs that differ only in metadata compare equal."""
    assert parse_amr("# ::id 1\n(h / hello)") == parse_amr("# ::id 2\n(h / hello)")


def test_inline_alignments_captured():
    """Test `~e.N` markers are stripped from labels and kept on the graph."""
    graph = parse_amr('(a / bark-01~e.1 :ARG0 (d / dog~e.3,4) :name "Rex"~e.5)')

    assert graph.instances == {"a": "bark-01", "d": "dog"}
    assert graph.alignments.concepts == {"a": (1,), "d": (3, 4)}
    assert graph.alignments.constants == {1: (5,)}
    assert graph.edges[1].target == Const("Rex", ConstKind.QUOTED)


def test_relation_alignment_marker_dropped():
    """Test an alignment on a relation label does not end up in the label."""
    graph = parse_amr("(a / bark-01 :ARG0~e.2 (d / dog))")
    assert graph.edges[0].relation == ":ARG0"


def test_unbalanced_open_paren():
    """Test a missing ')' is reported at the unclosed '('."""
    with pytest.raises(UnbalancedParensError) as exc_info:
        parse_amr("(a / b")

    assert exc_info.value.code == "amr_unbalanced_parens"
    assert (exc_info.value.line, exc_info.value.column) == (1, 1)


def test_unbalanced_close_paren():
    """Test a surplus ')' is reported where it appears."""
    with pytest.raises(UnbalancedParensError) as exc_info:
        parse_amr("(a / b))")

    assert (exc_info.value.line, exc_info.value.column) == (1, 8)


def test_duplicate_variable():
    """Test a variable defined twice points at the second definition."""
    with pytest.raises(DuplicateVariableDefinitionError) as exc_info:
        parse_amr("(a / b :ARG0 (a / c))")

    assert exc_info.value.code == "amr_duplicate_variable"
    assert (exc_info.value.line, exc_info.value.column) == (1, 15)
    assert exc_info.value.details["variable"] == "a"


def test_dangling_relation():
    """Test a relation without a value."""
    with pytest.raises(DanglingRelationError) as exc_info:
        parse_amr("(a / b :ARG0)")

    assert (exc_info.value.line, exc_info.value.column) == (1, 8)
    assert exc_info.value.details["relation"] == ":ARG0"


def test_undefined_variable_on_second_line():
    """Test positions count lines and columns from 1."""
    with pytest.raises(UndefinedVariableReferenceError) as exc_info:
        parse_amr("(a / b\n   :ARG0 x)")

    assert exc_info.value.code == "amr_undefined_variable"
    assert (exc_info.value.line, exc_info.value.column) == (2, 10)


def test_error_line_counts_metadata():
    """Test metadata lines are counted in the reported line."""
    with pytest.raises(UndefinedVariableReferenceError) as exc_info:
        parse_amr("# ::snt hi\n(a / b :ARG0 q)")

    assert (exc_info.value.line, exc_info.value.column) == (2, 14)


def test_missing_concept_after_slash():
    """Test `(a /)` has no concept."""
    with pytest.raises(MissingConceptError) as exc_info:
        parse_amr("(a /)")

    assert (exc_info.value.line, exc_info.value.column) == (1, 4)


def test_missing_slash():
    """Test a variable without `/ concept`."""
    with pytest.raises(MissingConceptError) as exc_info:
        parse_amr("(a :ARG0 (b / c))")

    assert exc_info.value.code == "amr_missing_concept"
    assert (exc_info.value.line, exc_info.value.column) == (1, 2)


def test_unterminated_string():
    """Test an unclosed quote is reported at the quote."""
    with pytest.raises(UnterminatedStringError) as exc_info:
        parse_amr('(a / b :name "Fra')

    assert (exc_info.value.line, exc_info.value.column) == (1, 14)


def test_empty_text():
    """Test empty input is a syntax error."""
    with pytest.raises(AmrSyntaxError) as exc_info:
        parse_amr("   \n")

    assert exc_info.value.code == "amr_empty"


def test_trailing_content():
    """Test text after the root node closes."""
    with pytest.raises(AmrSyntaxError) as exc_info:
        parse_amr("(a / b) (c / d)")

    assert exc_info.value.code == "amr_trailing_content"


def test_error_message_includes_position():
    """Test the message names line and column."""
    with pytest.raises(AmrSyntaxError) as exc_info:
        parse_amr("(a / b :ARG0)")

    assert "line 1, column 8" in str(exc_info.value)


def test_graph_rejects_unknown_edge_target():
    """Test graphs validate their edges on construction."""
    with pytest.raises(InvalidGraphError):
        AmrGraph(top="a", instances={"a": "b"}, edges=(Edge("a", ":ARG0", Var("z")),))


def test_graph_rejects_unknown_top():
    with pytest.raises(InvalidGraphError):
        AmrGraph(top="z", instances={"a": "b"})
