"""Attention-based scoring, inspection and comparison of NMT output."""

from .bleu import BleuScore, sentence_bleu
from .formats import ParseError, parse_block_text, parse_canonical, serialize_canonical
from .index import (
    ComparisonIndex,
    ComparisonPair,
    IndexVersionError,
    PairingError,
    ScoredDataset,
    SortField,
    load_index,
    load_paired_index,
    pair_datasets,
    save_index,
    save_paired_index,
    score_dataset,
    sort_indices,
)
from .records import AlignmentRecord, AttentionMatrix, Dataset, RecordWarning, validate_record
from .render import RenderOptions, render_comparison_svg, render_matrix_text, render_record_svg
from .scoring import (
    DEFAULT_THRESHOLDS,
    DiagnosticFlag,
    FlagKind,
    FlagThresholds,
    ScoreSet,
    absentmindedness_in,
    absentmindedness_out,
    compute_flags,
    confidence,
    coverage_deviation_penalty,
    overlap_penalty,
    score_record,
    to_percent,
)
from .service import create_app
from .textmatch import MatchSpan, longest_match_span, similarity

__version__ = "0.1.0"

__all__ = [
    "AlignmentRecord",
    "AttentionMatrix",
    "BleuScore",
    "ComparisonIndex",
    "ComparisonPair",
    "Dataset",
    "DEFAULT_THRESHOLDS",
    "DiagnosticFlag",
    "FlagKind",
    "FlagThresholds",
    "IndexVersionError",
    "MatchSpan",
    "PairingError",
    "ParseError",
    "RecordWarning",
    "RenderOptions",
    "ScoreSet",
    "ScoredDataset",
    "SortField",
    "absentmindedness_in",
    "absentmindedness_out",
    "compute_flags",
    "confidence",
    "coverage_deviation_penalty",
    "create_app",
    "load_index",
    "load_paired_index",
    "longest_match_span",
    "overlap_penalty",
    "pair_datasets",
    "parse_block_text",
    "parse_canonical",
    "render_comparison_svg",
    "render_matrix_text",
    "render_record_svg",
    "save_index",
    "save_paired_index",
    "score_dataset",
    "score_record",
    "sentence_bleu",
    "serialize_canonical",
    "similarity",
    "sort_indices",
    "to_percent",
    "validate_record",
]
