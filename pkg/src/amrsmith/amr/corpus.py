"""Streaming reader and writer for AMR corpus files.

Records are separated by one or more blank lines; each record is zero or
more `# ::key value` lines followed by the AMR text. Blocks without AMR text
(release headers) are skipped and take no index.
"""

import logging
from dataclasses import dataclass
from pathlib import Path
from typing import IO, Iterable, Iterator, List, Optional, Tuple, Union

from amrsmith.amr.models import AmrGraph
from amrsmith.amr.parser import parse_amr, parse_metadata, split_block
from amrsmith.amr.serializer import Layout, serialize_amr
from amrsmith.utils.errors import AmrSyntaxError, AmrsmithError
from amrsmith.utils.logging import CONTEXT_BLOCK_INDEX, CONTEXT_ERROR_CODE

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RawBlock:
    """One corpus record before parsing.

    Attributes:
        index: 0-based position among AMR-bearing blocks
        start_line: 1-based file line of the block's first line
        text: Full block text, metadata lines included
    """
    index: int
    start_line: int
    text: str

    @property
    def metadata(self):
        comments, _, _ = split_block(self.text)
        return parse_metadata(comments)

    @property
    def amr_text(self) -> str:
        return split_block(self.text)[1]

    def parse(self) -> AmrGraph:
        """Parse the block, reporting positions as file lines.

        Raises:
            AmrSyntaxError: With block_index and file_line in details
        """
        try:
            return parse_amr(self.text)
        except AmrSyntaxError as e:
            raise e.add_context(block_index=self.index, file_line=self.start_line + e.line - 1)


@dataclass(frozen=True)
class CorpusError:
    """A malformed block that was skipped."""
    block_index: int
    line: int
    error: AmrsmithError

    def __str__(self) -> str:
        return f"block {self.block_index} (line {self.line}): {self.error}"


def iter_blocks(stream: Iterable[str]) -> Iterator[RawBlock]:
    """Split a line stream into raw blocks."""
    lines: List[str] = []
    start = 0
    index = 0

    def flush() -> Optional[RawBlock]:
        nonlocal index
        has_amr = any(line.strip() and not line.lstrip().startswith("#") for line in lines)
        if not has_amr:
            return None
        block = RawBlock(index, start, "\n".join(lines))
        index += 1
        return block

    for number, line in enumerate(stream, start=1):
        line = line.rstrip("\r\n")
        if line.strip():
            if not lines:
                start = number
            lines.append(line)
            continue
        if lines:
            block = flush()
            if block is not None:
                yield block
            lines = []
    if lines:
        block = flush()
        if block is not None:
            yield block


def read_corpus(
    stream: Iterable[str],
    errors: Optional[List[CorpusError]] = None,
) -> Iterator[AmrGraph]:
    """Yield the graphs of a corpus, skipping malformed blocks.

    Args:
        stream: Lines of a corpus file
        errors: If given, receives one CorpusError per malformed block
    """
    for block in iter_blocks(stream):
        try:
            yield block.parse()
        except AmrSyntaxError as e:
            line = e.details.get("file_line", block.start_line)
            logger.warning(
                f"Skipping malformed block {block.index}: {e.message}",
                extra={CONTEXT_BLOCK_INDEX: block.index, CONTEXT_ERROR_CODE: e.code},
            )
            if errors is not None:
                errors.append(CorpusError(block.index, line, e))


def load_corpus(path: Union[str, Path]) -> Tuple[List[AmrGraph], List[CorpusError]]:
    """Read a whole corpus file."""
    errors: List[CorpusError] = []
    with open(path, encoding="utf-8") as f:
        graphs = list(read_corpus(f, errors))
    return graphs, errors


def load_blocks(path: Union[str, Path]) -> List[RawBlock]:
    with open(path, encoding="utf-8") as f:
        return list(iter_blocks(f))


def write_corpus(
    graphs: Iterable[AmrGraph],
    stream: IO[str],
    layout: Union[Layout, str] = Layout.INDENTED,
    include_metadata: bool = True,
) -> int:
    """Write graphs as blank-line separated records; returns the record count."""
    count = 0
    for graph in graphs:
        if count:
            stream.write("\n")
        stream.write(serialize_amr(graph, layout, include_metadata=include_metadata))
        stream.write("\n")
        count += 1
    return count
