"""Sentence cleaning."""

import re

from amrsmith.preprocess.models import SentenceRecord

HTML_TAG_RE = re.compile(r"<[A-Za-z/!][^>]*>")
_WHITESPACE_RE = re.compile(r"\s+")


def clean_sentence(raw: str) -> SentenceRecord:
    """Remove HTML tags and squeeze whitespace; URLs are kept as they are."""
    cleaned = _WHITESPACE_RE.sub(" ", HTML_TAG_RE.sub("", raw)).strip()
    return SentenceRecord(raw=raw, cleaned=cleaned, tokens=tuple(cleaned.split()))
