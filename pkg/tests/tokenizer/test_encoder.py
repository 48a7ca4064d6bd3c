"""Tests for character-level encoding."""

import random

import pytest

from amrsmith.preprocess import clean_sentence
from amrsmith.preprocess.models import SentenceRecord
from amrsmith.tokenizer import SymbolKind, TokenSequence, decode_amr, decode_sentence, encode_amr, encode_sentence

RICH_TOKENS = ("I", "am", "not", "that", "rich", ".")
RICH_TAGS = ("PRP", "VBP", "RB", "IN", "JJ", "")


@pytest.fixture
def rich_record():
    return SentenceRecord("I am not that rich .", "I am not that rich .", RICH_TOKENS, RICH_TAGS)


def test_plain_characters():
    assert encode_amr("(thing :quant 1)").to_line() == "( t h i n g + : q u a n t + 1 )"


def test_super_relations():
    """Test each relation becomes a single symbol."""
    encoded = encode_amr("(thing :quant 1 :polarity -)", super_relations=True)

    assert encoded.to_line() == "( t h i n g + :quant + 1 + :polarity + - )"
    assert encoded.kinds[7] is SymbolKind.RELATION


def test_depth_parens():
    encoded = encode_amr("(a :b (c))", depth_parens=True)
    assert encoded.to_line() == "*1*( a + : b + *2*( c *2*) *1*)"


def test_quoted_parens_stay_characters():
    encoded = encode_amr('(a :n "x(y)")', depth_parens=True)
    assert encoded.to_line() == '*1*( a + : n + " x ( y ) " *1*)'


def test_literal_plus_is_escaped():
    encoded = encode_amr('(a :op1 "+")')

    assert encoded.tokens[-4:] == ('"', "\\+", '"', ")")
    assert encoded.kinds[-3] is SymbolKind.ESCAPED
    assert decode_amr(encoded) == '(a :op1 "+")'


@pytest.mark.parametrize("options", [{}, {"super_relations": True}, {"depth_parens": True}])
def test_decode_from_file_line(options):
    """Test a written line reads back to the original text."""
    text = '(thing :quant 1 :polarity - :name "a+b (c)")'
    line = encode_amr(text, **options).to_line()

    assert decode_amr(TokenSequence.from_line(line)) == text


def test_pos_super_characters(rich_record):
    """Test tags follow their word and empty tags are left out."""
    encoded = encode_sentence(rich_record, with_pos=True)

    assert encoded.to_line() == "I PRP + a m VBP + n o t RB + t h a t IN + r i c h JJ + ."
    assert decode_sentence(encoded) == "I am not that rich ."


def test_sentence_without_pos(rich_record):
    assert encode_sentence(rich_record).to_line() == "I + a m + n o t + t h a t + r i c h + ."


def test_pos_needs_tags():
    with pytest.raises(ValueError):
        encode_sentence(clean_sentence("I am rich ."), with_pos=True)


def test_decode_sentence_from_file_line(rich_record):
    line = encode_sentence(rich_record, with_pos=True).to_line()
    assert decode_sentence(TokenSequence.from_line(line)) == "I am not that rich ."


def test_one_character_tag_reads_back_as_character():
    """Test a single-character tag is indistinguishable from text on reload."""
    record = SentenceRecord("hi .", "hi .", ("hi", "."), ("UH", "."))
    line = encode_sentence(record, with_pos=True).to_line()

    assert line == "h i UH + . ."
    assert decode_sentence(TokenSequence.from_line(line)) == "hi .."


def test_unmatched_close_paren_stays_character():
    """Test raw model output with extra `)` still encodes and decodes."""
    encoded = encode_amr("(a))", depth_parens=True)

    assert encoded.tokens == ("*1*(", "a", "*1*)", ")")
    assert encoded.kinds[-1] is SymbolKind.CHAR
    assert decode_amr(encode_amr("))", depth_parens=True)) == "))"


def test_decode_tolerates_unreadable_depth_token():
    tokens = TokenSequence(("*x*(", "a"), (SymbolKind.DEPTH_PAREN, SymbolKind.CHAR))
    assert decode_amr(tokens) == "*x*(a"


LINE_ALPHABET = 'ab:AR0G1-+ ()"\\*.'


@pytest.mark.parametrize("options", [{}, {"super_relations": True}, {"depth_parens": True},
                                     {"super_relations": True, "depth_parens": True}])
def test_decode_inverts_encode_on_random_lines(options):
    rng = random.Random(4)
    for _ in range(10_000):
        line = "".join(rng.choice(LINE_ALPHABET) for _ in range(rng.randint(0, 24)))
        encoded = encode_amr(line, **options)

        assert decode_amr(encoded) == line
        assert decode_amr(TokenSequence.from_line(encoded.to_line())) == line
