"""Core data model: attention matrices, alignment records, datasets.

All types are immutable after construction and safe to share across
threads. Construction validates the structural invariants; soft checks
(row stochasticity and friends) live in :func:`validate_record` and only
ever produce warnings, because summed multi-layer attention legitimately
violates them.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

# Row sums within [1 - ROW_SUM_EPS, 1 + ROW_SUM_EPS] are considered stochastic.
ROW_SUM_EPS = 1e-3


def _has_whitespace(s: str) -> bool:
    return any(ch.isspace() for ch in s)


@dataclass(frozen=True)
class AttentionMatrix:
    """Nonnegative weights, one row per hypothesis token, one column per
    source token: ``rows[j][i]`` connects source token i to hypothesis
    token j."""

    rows: tuple[tuple[float, ...], ...]

    def __post_init__(self) -> None:
        if not self.rows:
            raise ValueError("attention matrix must have at least one row")
        width = len(self.rows[0])
        if width == 0:
            raise ValueError("attention matrix must have at least one column")
        for j, row in enumerate(self.rows):
            if len(row) != width:
                raise ValueError(
                    f"attention matrix is ragged: row {j} has {len(row)} "
                    f"entries, expected {width}"
                )
            for i, w in enumerate(row):
                if not math.isfinite(w):
                    raise ValueError(f"attention[{j}][{i}] is not finite: {w!r}")
                if w < 0:
                    raise ValueError(f"attention[{j}][{i}] is negative: {w!r}")

    @property
    def n_rows(self) -> int:
        return len(self.rows)

    @property
    def n_cols(self) -> int:
        return len(self.rows[0])

    def row_sums(self) -> tuple[float, ...]:
        return tuple(sum(row) for row in self.rows)

    def column_sums(self) -> tuple[float, ...]:
        sums = [0.0] * self.n_cols
        for row in self.rows:
            for i, w in enumerate(row):
                sums[i] += w
        return tuple(sums)

    def column(self, i: int) -> tuple[float, ...]:
        return tuple(row[i] for row in self.rows)

    def max_weight(self) -> float:
        return max(max(row) for row in self.rows)

    @classmethod
    def from_rows(cls, rows) -> "AttentionMatrix":
        return cls(tuple(tuple(float(w) for w in row) for row in rows))


def _check_tokens(tokens: tuple[str, ...], which: str, record_id: str) -> None:
    if not tokens:
        raise ValueError(f"record {record_id!r}: {which} tokens must be non-empty")
    for t in tokens:
        if not t:
            raise ValueError(f"record {record_id!r}: empty {which} token")
        if _has_whitespace(t):
            # Tokens double as field content in the line formats; any
            # whitespace would break the escaping-free round trip.
            raise ValueError(
                f"record {record_id!r}: {which} token {t!r} contains whitespace"
            )


@dataclass(frozen=True)
class AlignmentRecord:
    """One source/hypothesis pair with its attention matrix.

    ``attention`` has exactly ``len(hyp_tokens)`` rows and
    ``len(src_tokens)`` columns. ``ref_text`` is an optional reference
    translation; it never influences the attention-based scores.
    """

    id: str
    src_tokens: tuple[str, ...]
    hyp_tokens: tuple[str, ...]
    attention: AttentionMatrix
    ref_text: str | None = None

    def __post_init__(self) -> None:
        if not self.id:
            # an empty id field would re-parse as the positional default
            raise ValueError("record id must be non-empty")
        if "\t" in self.id or "\n" in self.id or "\r" in self.id:
            raise ValueError(f"record id {self.id!r} contains a field separator")
        _check_tokens(self.src_tokens, "source", self.id)
        _check_tokens(self.hyp_tokens, "hypothesis", self.id)
        if self.attention.n_rows != len(self.hyp_tokens) or self.attention.n_cols != len(
            self.src_tokens
        ):
            raise ValueError(
                f"record {self.id!r}: dimension mismatch: attention is "
                f"{self.attention.n_rows}x{self.attention.n_cols}, expected "
                f"{len(self.hyp_tokens)}x{len(self.src_tokens)} "
                f"(hypothesis x source)"
            )
        if self.ref_text is not None:
            if "\t" in self.ref_text or "\n" in self.ref_text or "\r" in self.ref_text:
                raise ValueError(
                    f"record {self.id!r}: reference text contains a field separator"
                )
            if not self.ref_text.strip():
                raise ValueError(f"record {self.id!r}: reference text is blank")

    @property
    def src_len(self) -> int:
        return len(self.src_tokens)

    @property
    def hyp_len(self) -> int:
        return len(self.hyp_tokens)

    @property
    def src_text(self) -> str:
        return " ".join(self.src_tokens)

    @property
    def hyp_text(self) -> str:
        return " ".join(self.hyp_tokens)


@dataclass(frozen=True)
class Dataset:
    """Ordered collection of alignment records from one system."""

    system_name: str
    records: tuple[AlignmentRecord, ...]

    def __post_init__(self) -> None:
        if "\t" in self.system_name or "\n" in self.system_name:
            raise ValueError("system name contains a field separator")
        if not self.records:
            raise ValueError("empty dataset")
        seen: set[str] = set()
        for rec in self.records:
            if rec.id in seen:
                raise ValueError(f"duplicate record id {rec.id!r}")
            seen.add(rec.id)

    def __len__(self) -> int:
        return len(self.records)


@dataclass(frozen=True)
class RecordWarning:
    """Non-fatal finding from :func:`validate_record`."""

    kind: str
    message: str

    def __str__(self) -> str:
        return self.message


def validate_record(record: AlignmentRecord) -> list[RecordWarning]:
    """Soft checks on an already-constructed record.

    Returns warnings for rows whose sum deviates from 1 by more than
    ``ROW_SUM_EPS``, for all-zero rows, and for weights above
    ``1 + ROW_SUM_EPS``. Never raises: non-stochastic matrices (e.g.
    summed multi-layer attention) are usable, just worth flagging.
    """
    warnings: list[RecordWarning] = []
    for j, row in enumerate(record.attention.rows):
        total = sum(row)
        if all(w == 0.0 for w in row):
            warnings.append(
                RecordWarning(
                    "zero-row",
                    f"record {record.id!r}: attention row {j} is all zero",
                )
            )
        if abs(total - 1.0) > ROW_SUM_EPS:
            warnings.append(
                RecordWarning(
                    "row-sum",
                    f"record {record.id!r}: attention row {j} sums to {total:.6g}",
                )
            )
    peak = record.attention.max_weight()
    if peak > 1.0 + ROW_SUM_EPS:
        warnings.append(
            RecordWarning(
                "weight-above-one",
                f"record {record.id!r}: attention contains weight {peak:.6g} > 1",
            )
        )
    return warnings
