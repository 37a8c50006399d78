"""Parsers and serializer for the two on-disk alignment formats.

Canonical line-record format: UTF-8, one record per line, fields
separated by TAB:

    id <TAB> src tokens <TAB> hyp tokens <TAB> matrix [<TAB> reference]

Source and hypothesis tokens are joined by single spaces. The matrix
joins rows with ";" and entries within a row with ","; floats are
written with ``repr``, the shortest decimal form that round-trips the
stored value. An empty id field defaults to the 0-based record index.

Block-text format: one block per record,

    # <id>
    S: <src tokens>
    H: <hyp tokens>
    R: <reference>            (optional)
    <hyp-len lines of src-len space-separated floats>
    <blank line>

A missing blank-line terminator at end of file is tolerated. Parsing
preserves input order for both formats and never drops or merges
records.
"""

from __future__ import annotations

from typing import BinaryIO

from .records import AlignmentRecord, AttentionMatrix, Dataset


class ParseError(ValueError):
    """Malformed input; carries enough location to find the offender."""

    def __init__(
        self,
        reason: str,
        *,
        line_number: int | None = None,
        record_id: str | None = None,
        byte_offset: int | None = None,
    ) -> None:
        self.reason = reason
        self.line_number = line_number
        self.record_id = record_id
        self.byte_offset = byte_offset
        where = []
        if line_number is not None:
            where.append(f"line {line_number}")
        if record_id is not None:
            where.append(f"record {record_id!r}")
        if byte_offset is not None:
            where.append(f"byte offset {byte_offset}")
        prefix = ", ".join(where)
        super().__init__(f"{prefix}: {reason}" if prefix else reason)


def _read_text(stream: bytes | str | BinaryIO) -> str:
    if isinstance(stream, bytes):
        data = stream
    elif isinstance(stream, str):
        return stream
    else:
        data = stream.read()
    try:
        return data.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise ParseError(f"input is not valid UTF-8: {exc}") from None


def _split_lines(text: str) -> list[str]:
    # Tolerate CRLF input; output always uses plain "\n".
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    return [ln[:-1] if ln.endswith("\r") else ln for ln in lines]


def _parse_matrix_field(field: str, line_number: int) -> AttentionMatrix:
    rows = []
    for part in field.split(";"):
        entries = part.split(",")
        try:
            rows.append(tuple(float(e) for e in entries))
        except ValueError:
            raise ParseError(
                f"unparseable attention value in {part!r}", line_number=line_number
            ) from None
    try:
        return AttentionMatrix(tuple(rows))
    except ValueError as exc:
        raise ParseError(str(exc), line_number=line_number) from None


def _split_tokens(field: str, which: str, line_number: int) -> tuple[str, ...]:
    if not field:
        raise ParseError(f"empty {which} field", line_number=line_number)
    tokens = field.split(" ")
    if any(t == "" for t in tokens):
        raise ParseError(
            f"{which} field contains consecutive or edge spaces",
            line_number=line_number,
        )
    return tuple(tokens)


def parse_canonical(stream: bytes | str | BinaryIO, system_name: str = "") -> Dataset:
    """Parse the canonical line-record format.

    Raises :class:`ParseError` carrying the 1-based line number for
    malformed lines, the record id for dimension mismatches, and the
    message ``empty dataset`` for an input without records.
    """
    lines = _split_lines(_read_text(stream))
    records = []
    for index, line in enumerate(lines):
        line_number = index + 1
        if line == "":
            raise ParseError("blank line", line_number=line_number)
        fields = line.split("\t")
        if len(fields) not in (4, 5):
            raise ParseError(
                f"expected 4 or 5 tab-separated fields, got {len(fields)}",
                line_number=line_number,
            )
        rec_id = fields[0] if fields[0] != "" else str(index)
        src = _split_tokens(fields[1], "source", line_number)
        hyp = _split_tokens(fields[2], "hypothesis", line_number)
        matrix = _parse_matrix_field(fields[3], line_number)
        ref = fields[4] if len(fields) == 5 else None
        try:
            records.append(
                AlignmentRecord(
                    id=rec_id,
                    src_tokens=src,
                    hyp_tokens=hyp,
                    attention=matrix,
                    ref_text=ref,
                )
            )
        except ValueError as exc:
            raise ParseError(
                str(exc), line_number=line_number, record_id=rec_id
            ) from None
    if not records:
        raise ParseError("empty dataset")
    try:
        return Dataset(system_name=system_name, records=tuple(records))
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def parse_block_text(stream: bytes | str | BinaryIO, system_name: str = "") -> Dataset:
    """Parse the block-text format. Block order becomes record order."""
    lines = _split_lines(_read_text(stream))
    records = []
    pos = 0
    n = len(lines)
    block_index = 0
    while True:
        while pos < n and lines[pos].strip() == "":
            pos += 1
        if pos >= n:
            break
        line_number = pos + 1
        header = lines[pos]
        if not header.startswith("#"):
            raise ParseError(
                f"expected block header starting with '#', got {header!r}",
                line_number=line_number,
            )
        rec_id = header[1:].strip() or str(block_index)
        pos += 1

        def expect(prefix: str) -> str:
            nonlocal pos
            if pos >= n or not lines[pos].startswith(prefix):
                raise ParseError(
                    f"expected {prefix!r} line", line_number=pos + 1, record_id=rec_id
                )
            value = lines[pos][len(prefix):].strip()
            pos += 1
            return value

        src_text = expect("S:")
        hyp_text = expect("H:")
        src = tuple(src_text.split())
        hyp = tuple(hyp_text.split())
        if not src:
            raise ParseError("empty source", line_number=pos, record_id=rec_id)
        if not hyp:
            raise ParseError("empty hypothesis", line_number=pos, record_id=rec_id)
        ref = None
        if pos < n and lines[pos].startswith("R:"):
            ref = lines[pos][2:].strip()
            pos += 1
        rows = []
        for j in range(len(hyp)):
            if pos >= n or lines[pos].strip() == "":
                raise ParseError(
                    f"matrix row {j}: block ended early, expected "
                    f"{len(hyp)} rows",
                    line_number=pos + 1,
                    record_id=rec_id,
                )
            parts = lines[pos].split()
            if len(parts) != len(src):
                raise ParseError(
                    f"matrix row {j}: expected {len(src)} floats, got {len(parts)}",
                    line_number=pos + 1,
                    record_id=rec_id,
                )
            try:
                rows.append(tuple(float(p) for p in parts))
            except ValueError:
                raise ParseError(
                    f"matrix row {j}: unparseable float",
                    line_number=pos + 1,
                    record_id=rec_id,
                ) from None
            pos += 1
        if pos < n and lines[pos].strip() != "":
            raise ParseError(
                "expected blank line after matrix rows",
                line_number=pos + 1,
                record_id=rec_id,
            )
        pos += 1  # past the blank terminator (or EOF)
        try:
            records.append(
                AlignmentRecord(
                    id=rec_id,
                    src_tokens=src,
                    hyp_tokens=hyp,
                    attention=AttentionMatrix(tuple(rows)),
                    ref_text=ref,
                )
            )
        except ValueError as exc:
            raise ParseError(str(exc), record_id=rec_id) from None
        block_index += 1
    if not records:
        raise ParseError("empty dataset")
    try:
        return Dataset(system_name=system_name, records=tuple(records))
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def serialize_matrix(matrix: AttentionMatrix) -> str:
    return ";".join(",".join(repr(w) for w in row) for row in matrix.rows)


def serialize_record(record: AlignmentRecord) -> str:
    fields = [
        record.id,
        " ".join(record.src_tokens),
        " ".join(record.hyp_tokens),
        serialize_matrix(record.attention),
    ]
    if record.ref_text is not None:
        fields.append(record.ref_text)
    return "\t".join(fields)


def serialize_canonical(dataset: Dataset) -> bytes:
    """Emit the canonical line-record format, one newline-terminated line
    per record. ``parse_canonical(serialize_canonical(d)) == d``."""
    return (
        "".join(serialize_record(rec) + "\n" for rec in dataset.records)
    ).encode("utf-8")
