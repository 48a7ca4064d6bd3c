"""POS tag sidecar files: `token<TAB>tag` lines, blank line between sentences."""

import logging
from pathlib import Path
from typing import List, Sequence, Tuple, Union

from amrsmith.preprocess.models import SentenceRecord
from amrsmith.utils.errors import TagMismatchError

logger = logging.getLogger(__name__)

TaggedSentence = List[Tuple[str, str]]


def parse_tag_lines(lines: Sequence[str]) -> List[TaggedSentence]:
    """Group sidecar lines into sentences; a missing tag column is an empty tag."""
    sentences: List[TaggedSentence] = []
    current: TaggedSentence = []
    for line in lines:
        line = line.rstrip("\r\n")
        if not line.strip():
            if current:
                sentences.append(current)
                current = []
            continue
        token, _, tag = line.partition("\t")
        current.append((token, tag.strip()))
    if current:
        sentences.append(current)
    return sentences


def read_tag_sidecar(path: Union[str, Path]) -> List[TaggedSentence]:
    with open(path, encoding="utf-8") as f:
        return parse_tag_lines(f.readlines())


def attach_tags(
    records: Sequence[SentenceRecord],
    tagged: Sequence[TaggedSentence],
) -> List[SentenceRecord]:
    """Records with their sidecar tags.

    Raises:
        TagMismatchError: Sentence counts or token counts differ
    """
    if len(records) != len(tagged):
        raise TagMismatchError(
            f"{len(tagged)} tagged sentences for {len(records)} sentences",
            code="tokenize_tag_mismatch",
            details={"sentences": len(records), "tagged": len(tagged)},
        )
    result = []
    for index, (record, sentence) in enumerate(zip(records, tagged)):
        if len(sentence) != len(record.tokens):
            raise TagMismatchError(
                f"Sentence {index} has {len(record.tokens)} tokens but {len(sentence)} tags",
                code="tokenize_tag_mismatch",
                details={"line_index": index},
            )
        mismatched = [t for (t, _), w in zip(sentence, record.tokens) if t != w]
        if mismatched:
            logger.debug(
                f"Sentence {index}: sidecar tokens differ from the sentence",
                extra={"line_index": index, "tokens": mismatched[:3]},
            )
        result.append(record.with_tags(tag for _, tag in sentence))
    return result
