"""Read-only JSON API over one scored dataset or one paired comparison.

The index is an immutable snapshot taken at startup: no endpoint mutates
anything, so identical queries always produce byte-identical bodies and
concurrent reads are safe. Sort permutations are computed once per
(key, direction) and cached for the process lifetime.

Endpoints (all GET, JSON):

    /api/meta                          dataset metadata
    /api/records?offset&limit&sort&dir paged summaries (server-side sort)
    /api/record/{id}                   full record detail
    /api/compare/{id}                  both systems' take on one source

Static files for the browser UI are served at /. Error bodies carry a
machine-readable ``detail.code``. In comparison mode the list endpoints
describe system A; /api/compare/{id} returns both sides.
"""

from __future__ import annotations

from pathlib import Path

from fastapi import FastAPI, HTTPException
from fastapi.responses import HTMLResponse
from fastapi.staticfiles import StaticFiles

from .index import ComparisonIndex, INDEX_VERSION, ScoredDataset, SortField, sort_indices
from .records import AlignmentRecord
from .scoring import ScoreSet
from .textmatch import longest_match_span

MAX_PAGE_LIMIT = 500
DEFAULT_PAGE_LIMIT = 50
SNIPPET_CHARS = 120

# Match spans are reported only when the overlap percent exceeds this.
MATCH_SPAN_MIN_OVERLAP_PERCENT = 10.0

_FALLBACK_PAGE = """<!doctype html>
<html><head><title>attnscope</title></head>
<body>
<h1>attnscope inspection service</h1>
<p>No UI bundle is configured. The JSON API lives under
<a href="/api/meta">/api/meta</a>, /api/records, /api/record/{id}
and /api/compare/{id}.</p>
</body></html>
"""


def _snippet(text: str) -> str:
    if len(text) <= SNIPPET_CHARS:
        return text
    return text[: SNIPPET_CHARS - 1] + "…"


def _percent_payload(scores: ScoreSet) -> dict:
    return {
        "confidence": scores.confidence_percent,
        "cdp": scores.cdp_percent,
        "ap_out": scores.ap_out_percent,
        "ap_in": scores.ap_in_percent,
        "overlap": scores.overlap_percent,
        "bleu": scores.bleu_percent,
    }


def _flags_payload(scores: ScoreSet) -> list[dict]:
    ordered = sorted(scores.flags, key=lambda f: (f.kind.value, f.values))
    return [
        {"kind": f.kind.value, "values": {k: v for k, v in f.values}} for f in ordered
    ]


def _scores_payload(scores: ScoreSet) -> dict:
    return {
        "cdp": scores.cdp,
        "ap_out": scores.ap_out,
        "ap_in": scores.ap_in,
        "similarity": scores.similarity,
        "op": scores.op,
        "confidence": scores.confidence,
        "bleu": scores.bleu,
        "percent": _percent_payload(scores),
    }


def _summary_payload(position: int, record: AlignmentRecord, scores: ScoreSet) -> dict:
    return {
        "id": record.id,
        "position": position,
        "source": _snippet(record.src_text),
        "hypothesis": _snippet(record.hyp_text),
        "percent": _percent_payload(scores),
        "flags": [f.kind.value for f in sorted(scores.flags, key=lambda f: f.kind.value)],
    }


def _detail_payload(position: int, record: AlignmentRecord, scores: ScoreSet) -> dict:
    payload = {
        "id": record.id,
        "position": position,
        "source_tokens": list(record.src_tokens),
        "hypothesis_tokens": list(record.hyp_tokens),
        "source_text": record.src_text,
        "hypothesis_text": record.hyp_text,
        "attention": [list(row) for row in record.attention.rows],
        "reference": record.ref_text,
        "scores": _scores_payload(scores),
        "flags": _flags_payload(scores),
    }
    if scores.overlap_percent > MATCH_SPAN_MIN_OVERLAP_PERCENT:
        span = longest_match_span(record.src_text, record.hyp_text)
        payload["match_span"] = {
            "src_start": span.src_start,
            "src_end": span.src_end,
            "hyp_start": span.hyp_start,
            "hyp_end": span.hyp_end,
            "length": span.length,
        }
    return payload


def _bad_request(code: str, message: str) -> HTTPException:
    return HTTPException(status_code=400, detail={"code": code, "message": message})


def create_app(
    index: ScoredDataset | ComparisonIndex,
    ui_dir: str | Path | None = None,
) -> FastAPI:
    """Build the service around an immutable scored index."""
    comparison = isinstance(index, ComparisonIndex)
    primary: ScoredDataset = index.a if comparison else index
    secondary: ScoredDataset | None = index.b if comparison else None
    position_by_id = {rec.id: pos for pos, rec in enumerate(primary.records)}
    has_references = all(s.bleu is not None for s in primary.scores)
    sort_cache: dict[tuple[SortField, bool], tuple[int, ...]] = {}

    def _permutation(field: SortField, descending: bool) -> tuple[int, ...]:
        key = (field, descending)
        if key not in sort_cache:
            sort_cache[key] = sort_indices(primary, field, descending)
        return sort_cache[key]

    app = FastAPI(title="attnscope inspection service", docs_url=None, redoc_url=None)

    @app.get("/api/meta")
    def meta() -> dict:
        system_names = [primary.dataset.system_name]
        if secondary is not None:
            system_names.append(secondary.dataset.system_name)
        sort_keys = [f.value for f in SortField if f is not SortField.BLEU]
        if has_references:
            sort_keys.append(SortField.BLEU.value)
        return {
            "record_count": len(primary),
            "system_names": system_names,
            "has_references": has_references,
            "comparison": comparison,
            "format_version": int(INDEX_VERSION),
            "sort_keys": sort_keys,
        }

    @app.get("/api/records")
    def records(
        offset: int = 0, limit: int = DEFAULT_PAGE_LIMIT, sort: str = "", dir: str = "asc"
    ) -> dict:
        offset = max(0, offset)
        limit = max(1, min(MAX_PAGE_LIMIT, limit))
        if dir not in ("asc", "desc"):
            raise _bad_request("bad_direction", f"direction must be asc or desc, got {dir!r}")
        if sort == "":
            order = range(len(primary))
        else:
            try:
                field = SortField(sort)
            except ValueError:
                raise _bad_request("unknown_sort_key", f"unknown sort key {sort!r}") from None
            if field is SortField.BLEU and not has_references:
                raise _bad_request(
                    "bleu_requires_references",
                    "bleu sort needs a reference on every record",
                )
            order = _permutation(field, dir == "desc")
        window = list(order)[offset : offset + limit]
        return {
            "total": len(primary),
            "offset": offset,
            "limit": limit,
            "records": [
                _summary_payload(pos, primary.records[pos], primary.scores[pos])
                for pos in window
            ],
        }

    @app.get("/api/record/{record_id:path}")
    def record_detail(record_id: str) -> dict:
        pos = position_by_id.get(record_id)
        if pos is None:
            raise HTTPException(
                status_code=404,
                detail={"code": "unknown_id", "message": f"no record {record_id!r}"},
            )
        return _detail_payload(pos, primary.records[pos], primary.scores[pos])

    @app.get("/api/compare/{pair_id:path}")
    def compare_detail(pair_id: str) -> dict:
        if not comparison:
            raise HTTPException(
                status_code=409,
                detail={
                    "code": "not_comparison_mode",
                    "message": "service is hosting a single dataset",
                },
            )
        pos = position_by_id.get(pair_id)
        if pos is None:
            raise HTTPException(
                status_code=404,
                detail={"code": "unknown_id", "message": f"no pair {pair_id!r}"},
            )
        assert secondary is not None
        return {
            "id": pair_id,
            "position": pos,
            "source_tokens": list(primary.records[pos].src_tokens),
            "source_text": primary.records[pos].src_text,
            "a": {
                "system": primary.dataset.system_name,
                **_detail_payload(pos, primary.records[pos], primary.scores[pos]),
            },
            "b": {
                "system": secondary.dataset.system_name,
                **_detail_payload(pos, secondary.records[pos], secondary.scores[pos]),
            },
        }

    if ui_dir is not None and Path(ui_dir).is_dir():
        app.mount("/", StaticFiles(directory=str(ui_dir), html=True), name="ui")
    else:

        @app.get("/", include_in_schema=False)
        def fallback() -> HTMLResponse:
            return HTMLResponse(_FALLBACK_PAGE)

    return app
