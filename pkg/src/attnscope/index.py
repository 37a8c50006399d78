"""Whole-dataset scoring, sort orderings, two-system pairing, and the
versioned on-disk score index.

Index file layout (version 1): a header line

    #index <TAB> 1 <TAB> single <TAB> <system name>
    #index <TAB> 1 <TAB> paired <TAB> <system a> <TAB> <system b>

followed by one line per record: the five canonical record fields (the
reference field left empty when absent) extended with the score block

    cdp, ap_out, ap_in, similarity, op?, confidence, bleu?, flags

as TAB-separated fields, floats written with ``repr`` so every bit
pattern survives a round trip. Paired indexes interleave the two
systems: system A on even record lines, system B on odd ones. Flags are
``KIND{key=value,...}`` joined by ";".
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from pathlib import Path

from .formats import ParseError, serialize_matrix
from .records import AlignmentRecord, AttentionMatrix, Dataset
from .scoring import (
    DEFAULT_THRESHOLDS,
    DiagnosticFlag,
    FlagKind,
    FlagThresholds,
    ScoreSet,
    compute_flags,
    score_record,
)

INDEX_VERSION = "1"
_INDEX_MAGIC = "#index"
_RECORD_FIELDS = 13  # id, src, hyp, matrix, ref, 7 score fields, flags


class PairingError(ValueError):
    """Two datasets cannot be compared; carries the offending position."""

    def __init__(self, reason: str, position: int | None = None) -> None:
        self.position = position
        super().__init__(reason)


class IndexVersionError(ValueError):
    pass


@dataclass(frozen=True)
class ScoredDataset:
    """A dataset with one ScoreSet per record, in record order."""

    dataset: Dataset
    scores: tuple[ScoreSet, ...]

    def __post_init__(self) -> None:
        if len(self.scores) != len(self.dataset.records):
            raise ValueError(
                f"{len(self.scores)} score sets for "
                f"{len(self.dataset.records)} records"
            )

    @property
    def records(self) -> tuple[AlignmentRecord, ...]:
        return self.dataset.records

    def __len__(self) -> int:
        return len(self.dataset.records)


def score_dataset(
    dataset: Dataset, thresholds: FlagThresholds = DEFAULT_THRESHOLDS
) -> ScoredDataset:
    """Score every record; order and length mirror the dataset."""
    scores = []
    for rec in dataset.records:
        try:
            scores.append(score_record(rec, thresholds))
        except ValueError as exc:
            raise ValueError(f"record {rec.id!r}: {exc}") from exc
    return ScoredDataset(dataset=dataset, scores=tuple(scores))


class SortField(str, Enum):
    CONFIDENCE = "confidence"
    CDP = "cdp"
    AP_IN = "ap_in"
    AP_OUT = "ap_out"
    OVERLAP = "overlap"
    BLEU = "bleu"


def _sort_value(field: SortField, scores: ScoreSet) -> float:
    if field is SortField.CONFIDENCE:
        return scores.confidence
    if field is SortField.CDP:
        return scores.cdp
    if field is SortField.AP_IN:
        return scores.ap_in
    if field is SortField.AP_OUT:
        return scores.ap_out
    if field is SortField.OVERLAP:
        return scores.overlap_percent
    assert field is SortField.BLEU
    assert scores.bleu is not None
    return scores.bleu


def sort_indices(
    scored: ScoredDataset, field: SortField | str, descending: bool = False
) -> tuple[int, ...]:
    """Permutation of record positions under the given key. Ties keep
    record positions ascending in both directions, so two sorts with all
    values distinct are exact reverses of each other."""
    field = SortField(field)
    if field is SortField.BLEU and any(s.bleu is None for s in scored.scores):
        raise ValueError("bleu sort requires a reference on every record")
    values = [_sort_value(field, s) for s in scored.scores]
    if descending:
        return tuple(sorted(range(len(values)), key=lambda p: (-values[p], p)))
    return tuple(sorted(range(len(values)), key=lambda p: (values[p], p)))


@dataclass(frozen=True)
class ComparisonPair:
    """Two systems' takes on one source sentence."""

    source_id: str
    record_a: AlignmentRecord
    record_b: AlignmentRecord
    scores_a: ScoreSet
    scores_b: ScoreSet

    def __post_init__(self) -> None:
        if self.record_a.src_tokens != self.record_b.src_tokens:
            raise ValueError(
                f"pair {self.source_id!r}: source token sequences differ"
            )


def pair_datasets(a: ScoredDataset, b: ScoredDataset) -> tuple[ComparisonPair, ...]:
    """Pair records by position; every pair must share its exact source
    token sequence (hypotheses are free to differ in length and order).
    """
    if len(a) != len(b):
        raise PairingError(
            f"dataset sizes differ: {len(a)} vs {len(b)} records"
        )
    pairs = []
    for pos, (ra, rb) in enumerate(zip(a.records, b.records)):
        if ra.src_tokens != rb.src_tokens:
            raise PairingError(
                f"source mismatch at position {pos}: "
                f"{ra.src_text!r} vs {rb.src_text!r}",
                position=pos,
            )
        pairs.append(
            ComparisonPair(
                source_id=ra.id,
                record_a=ra,
                record_b=rb,
                scores_a=a.scores[pos],
                scores_b=b.scores[pos],
            )
        )
    return tuple(pairs)


@dataclass(frozen=True)
class ComparisonIndex:
    """Two scored datasets over identical sources."""

    a: ScoredDataset
    b: ScoredDataset

    def __post_init__(self) -> None:
        pair_datasets(self.a, self.b)  # validates sizes and sources

    @cached_property
    def pairs(self) -> tuple[ComparisonPair, ...]:
        return pair_datasets(self.a, self.b)

    def __len__(self) -> int:
        return len(self.a)


# --- serialization -----------------------------------------------------


def _serialize_flag(flag: DiagnosticFlag) -> str:
    inner = ",".join(f"{k}={v!r}" for k, v in flag.values)
    return f"{flag.kind.value}{{{inner}}}"


def _serialize_flags(flags: frozenset[DiagnosticFlag]) -> str:
    ordered = sorted(flags, key=lambda f: (f.kind.value, f.values))
    return ";".join(_serialize_flag(f) for f in ordered)


def _parse_flag(text: str) -> DiagnosticFlag:
    if not text.endswith("}") or "{" not in text:
        raise ValueError(f"malformed flag {text!r}")
    name, _, inner = text[:-1].partition("{")
    kind = FlagKind(name)
    values = []
    if inner:
        for part in inner.split(","):
            key, sep, raw = part.partition("=")
            if not sep:
                raise ValueError(f"malformed flag value {part!r}")
            values.append((key, float(raw)))
    return DiagnosticFlag(kind, tuple(values))


def _parse_flags(field: str) -> frozenset[DiagnosticFlag]:
    if not field:
        return frozenset()
    return frozenset(_parse_flag(part) for part in field.split(";"))


def _opt(value: float | None) -> str:
    return "" if value is None else repr(value)


def _record_line(rec: AlignmentRecord, scores: ScoreSet) -> str:
    fields = [
        rec.id,
        " ".join(rec.src_tokens),
        " ".join(rec.hyp_tokens),
        serialize_matrix(rec.attention),
        rec.ref_text if rec.ref_text is not None else "",
        repr(scores.cdp),
        repr(scores.ap_out),
        repr(scores.ap_in),
        repr(scores.similarity),
        _opt(scores.op),
        repr(scores.confidence),
        _opt(scores.bleu),
        _serialize_flags(scores.flags),
    ]
    return "\t".join(fields)


def _atomic_write(path: Path, data: bytes) -> None:
    tmp = path.with_name(path.name + ".tmp")
    tmp.write_bytes(data)
    os.replace(tmp, path)


def save_index(scored: ScoredDataset, path: str | Path) -> None:
    """Write a version-1 single-system index, atomically."""
    path = Path(path)
    lines = ["\t".join([_INDEX_MAGIC, INDEX_VERSION, "single", scored.dataset.system_name])]
    for rec, scores in zip(scored.records, scored.scores):
        lines.append(_record_line(rec, scores))
    _atomic_write(path, ("\n".join(lines) + "\n").encode("utf-8"))


def save_paired_index(comparison: ComparisonIndex, path: str | Path) -> None:
    """Write a version-1 paired index: A and B lines interleaved."""
    path = Path(path)
    lines = [
        "\t".join(
            [
                _INDEX_MAGIC,
                INDEX_VERSION,
                "paired",
                comparison.a.dataset.system_name,
                comparison.b.dataset.system_name,
            ]
        )
    ]
    for pos in range(len(comparison.a)):
        lines.append(_record_line(comparison.a.records[pos], comparison.a.scores[pos]))
        lines.append(_record_line(comparison.b.records[pos], comparison.b.scores[pos]))
    _atomic_write(path, ("\n".join(lines) + "\n").encode("utf-8"))


def _iter_lines(data: bytes):
    """Yield (byte_offset, decoded_line) per line, tracking offsets so
    corruption errors can point at the exact spot."""
    offset = 0
    for raw in data.split(b"\n"):
        yield offset, raw
        offset += len(raw) + 1


def _parse_float_field(raw: str, what: str, offset: int) -> float:
    try:
        return float(raw)
    except ValueError:
        raise ParseError(
            f"unparseable {what} value {raw!r}", byte_offset=offset
        ) from None


def _parse_opt_float(raw: str, what: str, offset: int) -> float | None:
    if raw == "":
        return None
    return _parse_float_field(raw, what, offset)


def _parse_record_line(line: str, offset: int) -> tuple[AlignmentRecord, ScoreSet]:
    fields = line.split("\t")
    if len(fields) != _RECORD_FIELDS:
        raise ParseError(
            f"expected {_RECORD_FIELDS} fields, got {len(fields)}",
            byte_offset=offset,
        )
    try:
        rows = tuple(
            tuple(float(e) for e in part.split(","))
            for part in fields[3].split(";")
        )
        record = AlignmentRecord(
            id=fields[0],
            src_tokens=tuple(fields[1].split(" ")),
            hyp_tokens=tuple(fields[2].split(" ")),
            attention=AttentionMatrix(rows),
            ref_text=fields[4] if fields[4] != "" else None,
        )
        scores = ScoreSet(
            cdp=_parse_float_field(fields[5], "cdp", offset),
            ap_out=_parse_float_field(fields[6], "ap_out", offset),
            ap_in=_parse_float_field(fields[7], "ap_in", offset),
            similarity=_parse_float_field(fields[8], "similarity", offset),
            op=_parse_opt_float(fields[9], "op", offset),
            confidence=_parse_float_field(fields[10], "confidence", offset),
            bleu=_parse_opt_float(fields[11], "bleu", offset),
            flags=_parse_flags(fields[12]),
        )
    except ParseError:
        raise
    except ValueError as exc:
        raise ParseError(str(exc), byte_offset=offset) from None
    return record, scores


def _load_lines(path: str | Path) -> tuple[list[str], list[tuple[AlignmentRecord, ScoreSet]]]:
    data = Path(path).read_bytes()
    lines = _iter_lines(data)
    offset, raw = next(lines)
    try:
        header = raw.decode("utf-8").split("\t")
    except UnicodeDecodeError:
        raise ParseError("index header is not valid UTF-8", byte_offset=0) from None
    if not header or header[0] != _INDEX_MAGIC:
        raise ParseError("not an index file (missing #index header)", byte_offset=0)
    if len(header) < 3:
        raise ParseError("truncated index header", byte_offset=0)
    if header[1] != INDEX_VERSION:
        raise IndexVersionError(
            f"unsupported index version {header[1]!r} (supported: {INDEX_VERSION})"
        )
    entries = []
    for offset, raw in lines:
        if raw == b"":
            continue  # trailing newline
        try:
            line = raw.decode("utf-8")
        except UnicodeDecodeError:
            raise ParseError("index line is not valid UTF-8", byte_offset=offset) from None
        entries.append(_parse_record_line(line, offset))
    if not entries:
        raise ParseError("empty index")
    return header, entries


def load_index(path: str | Path) -> ScoredDataset:
    """Load a single-system index saved by :func:`save_index`."""
    header, entries = _load_lines(path)
    if header[2] != "single":
        raise ParseError(
            f"expected a single-system index, found mode {header[2]!r} "
            "(use load_paired_index)",
            byte_offset=0,
        )
    if len(header) != 4:
        raise ParseError("malformed single-index header", byte_offset=0)
    dataset = Dataset(system_name=header[3], records=tuple(r for r, _ in entries))
    return ScoredDataset(dataset=dataset, scores=tuple(s for _, s in entries))


def load_paired_index(path: str | Path) -> ComparisonIndex:
    """Load a paired index saved by :func:`save_paired_index`."""
    header, entries = _load_lines(path)
    if header[2] != "paired":
        raise ParseError(
            f"expected a paired index, found mode {header[2]!r} (use load_index)",
            byte_offset=0,
        )
    if len(header) != 5:
        raise ParseError("malformed paired-index header", byte_offset=0)
    if len(entries) % 2 != 0:
        raise ParseError(
            f"paired index has an odd number of record lines ({len(entries)})"
        )
    a_entries = entries[0::2]
    b_entries = entries[1::2]
    a = ScoredDataset(
        dataset=Dataset(system_name=header[3], records=tuple(r for r, _ in a_entries)),
        scores=tuple(s for _, s in a_entries),
    )
    b = ScoredDataset(
        dataset=Dataset(system_name=header[4], records=tuple(r for r, _ in b_entries)),
        scores=tuple(s for _, s in b_entries),
    )
    return ComparisonIndex(a=a, b=b)
