"""Silver training data from two parsers' outputs."""

from amrsmith.silver.curate import (
    build_candidates,
    curate,
    curate_candidates,
    write_report,
    write_silver_corpus,
)
from amrsmith.silver.filters import agreement, agreement_filter, validity_filter
from amrsmith.silver.mixer import mix
from amrsmith.silver.models import (
    CurationReport,
    CurationResult,
    DropReason,
    FilterDecision,
    MixedRecord,
    MixSpec,
    ParseResult,
    SilverCandidate,
    Source,
)

__all__ = [
    "CurationReport",
    "CurationResult",
    "DropReason",
    "FilterDecision",
    "MixSpec",
    "MixedRecord",
    "ParseResult",
    "SilverCandidate",
    "Source",
    "agreement",
    "agreement_filter",
    "build_candidates",
    "curate",
    "curate_candidates",
    "mix",
    "validity_filter",
    "write_report",
    "write_silver_corpus",
]
