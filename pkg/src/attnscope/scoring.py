"""Attention-based confidence scoring.

Three log-domain penalties are computed from the attention matrix:

* coverage deviation, which punishes source tokens whose received
  attention strays from 1 in either direction;
* outbound absentmindedness, the averaged entropy of each hypothesis
  token's attention distribution over source tokens;
* inbound absentmindedness, the same per source token across hypothesis
  tokens.

All three are <= 0, with 0 at the ideal configuration (unit column
sums, one-hot rows, one-hot columns respectively), and all three are
normalized by the source length. The combined confidence is their sum;
when the source/hypothesis similarity reaches 0.3, a copy penalty that
grows with hypothesis length and similarity is subtracted, which is what
collapses the score of verbatim or near-verbatim "translations".

Log-domain scores are displayed as 100*exp(score), clamped to [0, 100].
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from enum import Enum

from .bleu import sentence_bleu
from .records import AlignmentRecord, AttentionMatrix
from .textmatch import similarity

# Rows / columns whose sum is this close to 1 are used as-is; anything
# else is renormalized, so scaling a distribution never changes its term.
RENORM_EPS = 1e-9

# Similarity at or above this applies the copy penalty to the confidence.
OVERLAP_PENALTY_MIN_SIMILARITY = 0.3


def coverage_deviation_penalty(attention: AttentionMatrix, src_len: int | None = None) -> float:
    """Penalty for source tokens receiving total attention far from 1.

    -(1/L_s) * sum_i log(1 + (1 - cov_i)^2), cov_i the attention mass
    landing on source token i. Zero iff every column sums to exactly 1.
    """
    ls = attention.n_cols if src_len is None else src_len
    total = 0.0
    for cov in attention.column_sums():
        total += math.log1p((1.0 - cov) ** 2)
    return -total / ls


def _entropy_term(values) -> float:
    total = sum(values)
    if total == 0.0:
        return 0.0
    if abs(total - 1.0) > RENORM_EPS:
        values = [v / total for v in values]
    acc = 0.0
    for v in values:
        if v > 0.0:
            acc += v * math.log(v)
    return acc


def absentmindedness_out(attention: AttentionMatrix, src_len: int | None = None) -> float:
    """Diffuseness of each hypothesis token's attention, averaged over
    the source length: (1/L_s) * sum of row entropies as sum p*ln(p).
    Zero iff every row is one-hot; all-zero rows contribute nothing.
    """
    ls = attention.n_cols if src_len is None else src_len
    total = 0.0
    for row in attention.rows:
        total += _entropy_term(row)
    # raw near-stochastic rows may carry entries a hair above 1
    return min(0.0, total / ls)


def absentmindedness_in(attention: AttentionMatrix, src_len: int | None = None) -> float:
    """Same as :func:`absentmindedness_out` but per source token, i.e.
    over column distributions: how many hypothesis tokens each source
    token feeds."""
    ls = attention.n_cols if src_len is None else src_len
    total = 0.0
    for i in range(attention.n_cols):
        total += _entropy_term(attention.column(i))
    return min(0.0, total / ls)


def overlap_penalty(hyp_len: int, sim: float) -> float:
    """Copy penalty: grows with hypothesis length and similarity; short
    sentences get tolerance. Negative for similarity just above the
    application threshold, which is kept as defined (the percent clamp
    bounds any display). ``tan`` is evaluated in radians."""
    return (0.8 + hyp_len * 0.01) * (3.0 - (1.0 - sim) * 5.0) * (0.7 + sim) * math.tan(sim)


def confidence(cdp: float, ap_out: float, ap_in: float, hyp_len: int, sim: float) -> float:
    """Combined log-domain confidence: the sum of the three attention
    penalties, minus the copy penalty once similarity reaches 0.3."""
    total = cdp + ap_out + ap_in
    if sim < OVERLAP_PENALTY_MIN_SIMILARITY:
        return total
    return total - overlap_penalty(hyp_len, sim)


def to_percent(log_score: float) -> float:
    """Display form of a log-domain score: 100*exp(score), clamped to
    [0, 100]. Monotone nondecreasing; 0 maps to 100."""
    if log_score >= 0.0:
        return 100.0
    return max(0.0, 100.0 * math.exp(log_score))


class FlagKind(Enum):
    LOW_ATTENTION_QUALITY = "LOW_ATTENTION_QUALITY"
    POSSIBLE_UNTRANSLATED = "POSSIBLE_UNTRANSLATED"
    REFERENCE_DIVERGENT = "REFERENCE_DIVERGENT"


@dataclass(frozen=True)
class DiagnosticFlag:
    """A triggered debugging recipe, with the values that tripped it."""

    kind: FlagKind
    values: tuple[tuple[str, float], ...] = ()


@dataclass(frozen=True)
class FlagThresholds:
    """Tunable cutoffs for the diagnostic flags; defaults follow the
    debugging recipes (percent scores under 30 are suspect, overlap of
    50%+ on 10+ word hypotheses suggests untranslated output, BLEU under
    25 points with healthy attention suggests mere reference
    divergence)."""

    low_quality_percent: float = 30.0
    untranslated_min_tokens: int = 10
    untranslated_overlap_percent: float = 50.0
    divergent_bleu_points: float = 25.0
    divergent_attention_percent: float = 50.0


DEFAULT_THRESHOLDS = FlagThresholds()


@dataclass(frozen=True)
class ScoreSet:
    """Every per-record score. ``op`` is present iff similarity >= 0.3;
    ``bleu`` iff the record carried a reference. BLEU never feeds into
    ``confidence``."""

    cdp: float
    ap_out: float
    ap_in: float
    similarity: float
    op: float | None
    confidence: float
    bleu: float | None
    flags: frozenset[DiagnosticFlag] = frozenset()

    def __post_init__(self) -> None:
        for name in ("cdp", "ap_out", "ap_in"):
            v = getattr(self, name)
            if not v <= 0.0:
                raise ValueError(f"{name} must be <= 0, got {v!r}")
        if not 0.0 <= self.similarity <= 1.0:
            raise ValueError(f"similarity out of range: {self.similarity!r}")
        if (self.op is not None) != (self.similarity >= OVERLAP_PENALTY_MIN_SIMILARITY):
            raise ValueError("op must be present iff similarity >= 0.3")
        if self.bleu is not None and not 0.0 <= self.bleu <= 1.0:
            raise ValueError(f"bleu out of range: {self.bleu!r}")
        if not math.isfinite(self.confidence):
            raise ValueError(f"confidence must be finite, got {self.confidence!r}")

    @property
    def overlap_percent(self) -> float:
        return 100.0 * self.similarity

    @property
    def cdp_percent(self) -> float:
        return to_percent(self.cdp)

    @property
    def ap_out_percent(self) -> float:
        return to_percent(self.ap_out)

    @property
    def ap_in_percent(self) -> float:
        return to_percent(self.ap_in)

    @property
    def confidence_percent(self) -> float:
        return to_percent(self.confidence)

    @property
    def bleu_percent(self) -> float | None:
        return None if self.bleu is None else 100.0 * self.bleu


def compute_flags(
    record: AlignmentRecord,
    scores: ScoreSet,
    thresholds: FlagThresholds = DEFAULT_THRESHOLDS,
) -> frozenset[DiagnosticFlag]:
    """Deterministic function of the record and its scores; recomputing
    always yields the same set."""
    attention_percents = (
        scores.confidence_percent,
        scores.cdp_percent,
        scores.ap_in_percent,
        scores.ap_out_percent,
    )
    weakest = min(attention_percents)
    flags = set()
    if weakest < thresholds.low_quality_percent:
        flags.add(
            DiagnosticFlag(
                FlagKind.LOW_ATTENTION_QUALITY,
                (("min_percent", weakest),),
            )
        )
    if (
        record.hyp_len >= thresholds.untranslated_min_tokens
        and scores.overlap_percent >= thresholds.untranslated_overlap_percent
    ):
        flags.add(
            DiagnosticFlag(
                FlagKind.POSSIBLE_UNTRANSLATED,
                (
                    ("hyp_len", float(record.hyp_len)),
                    ("overlap_percent", scores.overlap_percent),
                ),
            )
        )
    if (
        scores.bleu is not None
        and 100.0 * scores.bleu < thresholds.divergent_bleu_points
        and weakest >= thresholds.divergent_attention_percent
    ):
        flags.add(
            DiagnosticFlag(
                FlagKind.REFERENCE_DIVERGENT,
                (
                    ("bleu_percent", 100.0 * scores.bleu),
                    ("min_attention_percent", weakest),
                ),
            )
        )
    return frozenset(flags)


def score_record(
    record: AlignmentRecord,
    thresholds: FlagThresholds = DEFAULT_THRESHOLDS,
) -> ScoreSet:
    """Compute the full ScoreSet for one record. BLEU is filled only
    when a reference is present and is never read by the confidence."""
    cdp = coverage_deviation_penalty(record.attention)
    ap_out = absentmindedness_out(record.attention)
    ap_in = absentmindedness_in(record.attention)
    sim = similarity(record.src_text, record.hyp_text)
    op = overlap_penalty(record.hyp_len, sim) if sim >= OVERLAP_PENALTY_MIN_SIMILARITY else None
    conf = confidence(cdp, ap_out, ap_in, record.hyp_len, sim)
    bleu_value = None
    if record.ref_text is not None:
        bleu_value = sentence_bleu(record.hyp_tokens, tuple(record.ref_text.split())).value
    scores = ScoreSet(
        cdp=cdp,
        ap_out=ap_out,
        ap_in=ap_in,
        similarity=sim,
        op=op,
        confidence=conf,
        bleu=bleu_value,
    )
    return replace(scores, flags=compute_flags(record, scores, thresholds))
