"""Shared fixtures."""

import logging

import pytest

from amrsmith.amr import parse_amr
from tests.samples import HEAT_WAVE_AMR, OPIUM_AMR, OPIUM_JAMR_ALIGNMENTS, OPIUM_SENTENCE


@pytest.fixture(autouse=True)
def reset_root_logging():
    """Commands reconfigure the root logger; put it back after each test."""
    root = logging.getLogger()
    handlers = root.handlers[:]
    level = root.level
    yield
    root.handlers[:] = handlers
    root.setLevel(level)


@pytest.fixture
def heat_wave_graph():
    return parse_amr(HEAT_WAVE_AMR)


@pytest.fixture
def opium_graph():
    return parse_amr(OPIUM_AMR)


@pytest.fixture
def opium_corpus(tmp_path):
    """Gold corpus file with one aligned record."""
    path = tmp_path / "gold.amr"
    path.write_text(
        f"# ::id opium.1\n# ::snt {OPIUM_SENTENCE}\n"
        f"# ::alignments {OPIUM_JAMR_ALIGNMENTS}\n{OPIUM_AMR}\n",
        encoding="utf-8",
    )
    return path
