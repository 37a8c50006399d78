"""Terminal and SVG views of attention alignments.

The terminal view is a shade-character grid: hypothesis tokens label the
rows, source tokens run as vertical column headers, and each cell is one
character from a shade ramp bucketed over [0, max weight].

The SVG views draw token rows connected by alignment lines whose opacity
follows the weight; weights at or below 0.05 are not drawn at all, which
keeps summed multi-layer matrices from rendering as ink. Output is plain
SVG 1.1 text, byte-identical across runs for identical input.
"""

from __future__ import annotations

from dataclasses import dataclass
from xml.sax.saxutils import escape

from .index import ComparisonPair
from .records import AlignmentRecord
from .scoring import ScoreSet

# Alignment lines are drawn only for weights strictly above this.
DRAW_THRESHOLD = 0.05

COLOR_SINGLE = "#3465a4"
COLOR_SYSTEM_A = "#e08020"  # orange
COLOR_SYSTEM_B = "#2e8b57"  # green

_CHAR_W = 8
_TOKEN_GAP = 14
_MARGIN = 20
_FONT = 'font-family="monospace" font-size="13"'


@dataclass(frozen=True)
class RenderOptions:
    """Terminal grid options. The shade ramp runs light to dark and its
    buckets split [0, max weight] evenly."""

    max_width: int = 100
    shade_ramp: str = " ░▒▓█"
    color: bool = False

    def __post_init__(self) -> None:
        if not self.shade_ramp:
            raise ValueError("shade ramp must be non-empty")
        if self.max_width < 8:
            raise ValueError("max_width too small to render anything")


def _bucket(weight: float, peak: float, ramp: str) -> int:
    if peak <= 0.0:
        return 0
    idx = int(weight / peak * len(ramp))
    return min(idx, len(ramp) - 1)


_ANSI_RAMP_CODES = (238, 244, 250, 255)


def _colorize(ch: str, bucket: int, ramp_len: int) -> str:
    code = _ANSI_RAMP_CODES[min(bucket * len(_ANSI_RAMP_CODES) // max(ramp_len, 1), 3)]
    return f"\x1b[38;5;{code}m{ch}\x1b[0m"


def render_matrix_text(record: AlignmentRecord, options: RenderOptions = RenderOptions()) -> str:
    """Shade-character grid of the attention matrix. Columns beyond the
    width budget are dropped and marked with a trailing ellipsis column.
    """
    ramp = options.shade_ramp
    peak = record.attention.max_weight()
    label_w = min(14, max(len(t) for t in record.hyp_tokens), options.max_width - 4)
    budget = options.max_width - label_w - 1
    n_cols = record.attention.n_cols
    truncated = n_cols > budget
    shown = min(n_cols, budget - 1 if truncated else budget)

    lines = []
    header_h = min(10, max(len(t) for t in record.src_tokens[:shown]) if shown else 0)
    for row in range(header_h):
        cells = []
        for i in range(shown):
            tok = record.src_tokens[i]
            cells.append(tok[row] if row < len(tok) else " ")
        lines.append(" " * (label_w + 1) + "".join(cells) + ("…" if truncated else ""))
    for j, tok in enumerate(record.hyp_tokens):
        label = tok if len(tok) <= label_w else tok[: label_w - 1] + "…"
        cells = []
        for i in range(shown):
            b = _bucket(record.attention.rows[j][i], peak, ramp)
            ch = ramp[b]
            cells.append(_colorize(ch, b, len(ramp)) if options.color else ch)
        lines.append(label.rjust(label_w) + " " + "".join(cells) + ("…" if truncated else ""))
    return "\n".join(lines) + "\n"


def _token_row(tokens: tuple[str, ...]) -> tuple[list[tuple[float, float]], float]:
    """Left x and center x for each token laid out on one line."""
    x = float(_MARGIN)
    spans = []
    for tok in tokens:
        w = max(1, len(tok)) * _CHAR_W
        spans.append((x, x + w / 2.0))
        x += w + _TOKEN_GAP
    return spans, x - _TOKEN_GAP + _MARGIN


def _text_el(x: float, y: float, content: str, fill: str = "#000000") -> str:
    return (
        f'<text x="{x:.1f}" y="{y:.1f}" {_FONT} fill="{fill}">'
        f"{escape(content)}</text>"
    )


def _token_group(cls: str, tokens: tuple[str, ...], y: float, fill: str) -> str:
    spans, _ = _token_row(tokens)
    parts = [f'<g class="{cls}">']
    for (left, _), tok in zip(spans, tokens):
        parts.append(_text_el(left, y, tok, fill))
    parts.append("</g>")
    return "\n".join(parts)


def _alignment_lines(
    record: AlignmentRecord,
    src_centers: list[float],
    hyp_centers: list[float],
    y_src: float,
    y_hyp: float,
    color: str,
) -> str:
    parts = [f'<g class="alignment-lines" stroke="{color}">']
    for j, row in enumerate(record.attention.rows):
        for i, w in enumerate(row):
            if w > DRAW_THRESHOLD:
                opacity = min(1.0, w)
                parts.append(
                    f'<line x1="{src_centers[i]:.1f}" y1="{y_src:.1f}" '
                    f'x2="{hyp_centers[j]:.1f}" y2="{y_hyp:.1f}" '
                    f'stroke-opacity="{opacity:.4f}"/>'
                )
    parts.append("</g>")
    return "\n".join(parts)


def _percent_lines(scores: ScoreSet) -> list[str]:
    out = [
        f"Confidence: {scores.confidence_percent:.2f}%",
        f"CDP: {scores.cdp_percent:.2f}%",
        f"AP_out: {scores.ap_out_percent:.2f}%",
        f"AP_in: {scores.ap_in_percent:.2f}%",
        f"Overlap: {scores.overlap_percent:.2f}%",
    ]
    if scores.bleu_percent is not None:
        out.append(f"BLEU: {scores.bleu_percent:.2f}%")
    return out


def _score_panel(scores: ScoreSet, x: float, y: float, title: str | None = None) -> str:
    parts = [f'<g class="score-panel">']
    if title is not None:
        parts.append(_text_el(x, y, title))
        y += 18.0
    for line in _percent_lines(scores):
        parts.append(_text_el(x, y, line, fill="#333333"))
        y += 18.0
    parts.append("</g>")
    return "\n".join(parts)


def _svg_document(width: float, height: float, body: list[str]) -> str:
    head = (
        '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{width:.0f}" height="{height:.0f}" '
        f'viewBox="0 0 {width:.0f} {height:.0f}">'
    )
    return "\n".join([head, *body, "</svg>"]) + "\n"


def render_record_svg(record: AlignmentRecord, scores: ScoreSet) -> str:
    """Self-contained SVG: source row, hypothesis row, alignment lines
    with weight-proportional opacity, and the percent score panel."""
    src_spans, src_w = _token_row(record.src_tokens)
    hyp_spans, hyp_w = _token_row(record.hyp_tokens)
    y_src, y_hyp = 40.0, 150.0
    panel_y = y_hyp + 40.0
    n_score_lines = len(_percent_lines(scores))
    width = max(src_w, hyp_w, 260.0)
    height = panel_y + n_score_lines * 18.0 + _MARGIN
    body = [
        _alignment_lines(
            record,
            [c for _, c in src_spans],
            [c for _, c in hyp_spans],
            y_src + 6.0,
            y_hyp - 14.0,
            COLOR_SINGLE,
        ),
        _token_group("source-tokens", record.src_tokens, y_src, "#000000"),
        _token_group("hypothesis-tokens", record.hyp_tokens, y_hyp, COLOR_SINGLE),
        _score_panel(scores, float(_MARGIN), panel_y),
    ]
    return _svg_document(width, height, body)


def render_comparison_svg(pair: ComparisonPair) -> str:
    """Source row on top, system A's hypothesis (orange) and system B's
    (green) beneath, alignment lines and tokens color-matched, one score
    panel per system."""
    src_spans, src_w = _token_row(pair.record_a.src_tokens)
    a_spans, a_w = _token_row(pair.record_a.hyp_tokens)
    b_spans, b_w = _token_row(pair.record_b.hyp_tokens)
    y_src, y_a, y_b = 40.0, 150.0, 260.0
    panel_y = y_b + 40.0
    n_lines = 1 + max(len(_percent_lines(pair.scores_a)), len(_percent_lines(pair.scores_b)))
    panel_b_x = max(a_w, b_w, src_w, 240.0) / 2.0 + float(_MARGIN)
    width = max(src_w, a_w, b_w, 2.0 * panel_b_x)
    height = panel_y + n_lines * 18.0 + _MARGIN
    src_centers = [c for _, c in src_spans]
    body = [
        _alignment_lines(
            pair.record_a,
            src_centers,
            [c for _, c in a_spans],
            y_src + 6.0,
            y_a - 14.0,
            COLOR_SYSTEM_A,
        ),
        _alignment_lines(
            pair.record_b,
            src_centers,
            [c for _, c in b_spans],
            y_src + 6.0,
            y_b - 14.0,
            COLOR_SYSTEM_B,
        ),
        _token_group("source-tokens", pair.record_a.src_tokens, y_src, "#000000"),
        _token_group("hypothesis-a-tokens", pair.record_a.hyp_tokens, y_a, COLOR_SYSTEM_A),
        _token_group("hypothesis-b-tokens", pair.record_b.hyp_tokens, y_b, COLOR_SYSTEM_B),
        _score_panel(pair.scores_a, float(_MARGIN), panel_y, title="System A"),
        _score_panel(pair.scores_b, panel_b_x, panel_y, title="System B"),
    ]
    return _svg_document(width, height, body)
