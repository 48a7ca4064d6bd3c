"""Adding `:wiki` links to named entities."""

import logging
import re
from pathlib import Path
from typing import Dict, List, Optional, Protocol, Tuple, Union

from amrsmith.amr.models import AmrGraph, Const, ConstKind, Edge, Var
from amrsmith.utils.errors import GazetteerUnavailableError

logger = logging.getLogger(__name__)

_OP_RE = re.compile(r":op(\d+)")
NO_PAGE = "-"


class WikiBackend(Protocol):
    def lookup(self, name: str) -> Optional[str]:
        """Wiki title for a name string, `-` for "no page", None on a miss."""


def normalize_name(name: str) -> str:
    return name.replace('"', "").strip().casefold()


class Gazetteer:
    """Offline name → title map read from `name<TAB>title` lines."""

    def __init__(self, entries: Optional[Dict[str, str]] = None):
        self.entries: Dict[str, str] = {
            normalize_name(k): v for k, v in (entries or {}).items()
        }

    @classmethod
    def load(cls, path: Union[str, Path]) -> "Gazetteer":
        """Read a gazetteer TSV.

        Raises:
            GazetteerUnavailableError: The file cannot be opened
        """
        try:
            with open(path, encoding="utf-8") as f:
                lines = f.readlines()
        except OSError as e:
            raise GazetteerUnavailableError(
                f"Cannot open gazetteer {path}: {e}",
                code="wiki_gazetteer_unavailable",
                details={"path": str(path)},
            ) from e
        entries: Dict[str, str] = {}
        for number, line in enumerate(lines, start=1):
            line = line.rstrip("\r\n")
            if not line.strip() or line.startswith("#"):
                continue
            name, sep, title = line.partition("\t")
            if not sep or not title.strip():
                logger.warning(f"Skipping gazetteer line {number}: expected name<TAB>title")
                continue
            entries[name] = title.strip()
        logger.info(f"Loaded {len(entries)} gazetteer entries from {path}")
        return cls(entries)

    def __len__(self) -> int:
        return len(self.entries)

    def lookup(self, name: str) -> Optional[str]:
        return self.entries.get(normalize_name(name))


def name_string(graph: AmrGraph, name_variable: str) -> Optional[str]:
    """`:opN` values of a name node joined by spaces in N order."""
    ops: List[Tuple[int, str]] = []
    for edge in graph.outgoing(name_variable):
        match = _OP_RE.fullmatch(edge.relation)
        if match and isinstance(edge.target, Const):
            ops.append((int(match.group(1)), edge.target.literal))
    if not ops:
        return None
    return " ".join(value for _, value in sorted(ops))


def named_entities(graph: AmrGraph) -> List[Tuple[str, str]]:
    """(entity variable, name string) for every `:name` edge with op values."""
    found = []
    for edge in graph.edges:
        if edge.relation == ":name" and isinstance(edge.target, Var):
            name = name_string(graph, edge.target.id)
            if name:
                found.append((edge.source, name))
    return found


def wikify_with_links(graph: AmrGraph, backend: WikiBackend) -> Tuple[AmrGraph, List[Tuple[str, str, str]]]:
    """wikify plus the (variable, name, title) links added."""
    linked = {e.source for e in graph.edges if e.relation == ":wiki"}
    titles: Dict[str, Tuple[str, str]] = {}
    for variable, name in named_entities(graph):
        if variable in linked or variable in titles:
            continue
        title = backend.lookup(name)
        if title:
            titles[variable] = (name, title)
    if not titles:
        return graph, []

    edges: List[Edge] = []
    for edge in graph.edges:
        if edge.relation == ":name" and edge.source in titles and edge.source not in linked:
            title = titles[edge.source][1]
            value = Const(NO_PAGE, ConstKind.SYMBOL) if title == NO_PAGE else Const(title, ConstKind.QUOTED)
            edges.append(Edge(edge.source, ":wiki", value))
            linked.add(edge.source)
        edges.append(edge)
    links = [(v, name, title) for v, (name, title) in titles.items()]
    return graph.with_edges(edges), links


def wikify(graph: AmrGraph, backend: WikiBackend) -> AmrGraph:
    """Link named entities found by the backend; misses leave the graph as is.

    The `:wiki` edge goes just before the entity's `:name` edge; entities
    that already have a `:wiki` edge are skipped.
    """
    return wikify_with_links(graph, backend)[0]
