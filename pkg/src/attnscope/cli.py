"""Command-line entry point.

Subcommands: score, top, render, serve, compare. Exit codes: 0 success,
1 usage error, 2 data error (parse failures, pairing mismatches,
unknown ids, unreadable files).
"""

from __future__ import annotations

import argparse
import sys
from collections import Counter
from dataclasses import dataclass, replace
from pathlib import Path

from .formats import ParseError, parse_block_text, parse_canonical
from .index import (
    ComparisonIndex,
    PairingError,
    ScoredDataset,
    SortField,
    load_index,
    load_paired_index,
    save_index,
    save_paired_index,
    score_dataset,
    sort_indices,
)
from .records import Dataset, validate_record
from .render import RenderOptions, render_comparison_svg, render_matrix_text, render_record_svg
from .scoring import FlagThresholds
from .service import create_app

USAGE_ERROR = 1
DATA_ERROR = 2


@dataclass(frozen=True)
class CliConfig:
    subcommand: str
    inputs: tuple[str, ...]
    input_format: str = "auto"
    refs_path: str | None = None
    output_path: str | None = None
    sort_key: str = "confidence"
    descending: bool = False
    top_n: int = 10
    flagged_only: bool = False
    record_id: str | None = None
    host: str = "127.0.0.1"
    port: int = 8000
    ui_dir: str | None = None
    max_width: int = 100
    color: bool = False
    system_name: str | None = None
    thresholds: FlagThresholds = FlagThresholds()


class _Parser(argparse.ArgumentParser):
    """argparse exits 2 on usage problems; this tool reserves 2 for data
    errors, so remap usage to 1."""

    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        self.exit(USAGE_ERROR, f"{self.prog}: error: {message}\n")


def _add_threshold_args(p: argparse.ArgumentParser) -> None:
    g = p.add_argument_group("diagnostic flag thresholds")
    g.add_argument("--low-quality-percent", type=float, default=30.0,
                   help="flag records with any attention percent below this (default 30)")
    g.add_argument("--untranslated-min-tokens", type=int, default=10,
                   help="minimum hypothesis length for the untranslated flag (default 10)")
    g.add_argument("--untranslated-overlap-percent", type=float, default=50.0,
                   help="overlap percent triggering the untranslated flag (default 50)")
    g.add_argument("--divergent-bleu-points", type=float, default=25.0,
                   help="BLEU points below which a record may be reference-divergent (default 25)")
    g.add_argument("--divergent-attention-percent", type=float, default=50.0,
                   help="attention percents required alongside low BLEU (default 50)")


def _add_common_input_args(p: argparse.ArgumentParser, n_inputs: str) -> None:
    if n_inputs == "one":
        p.add_argument("input", help="alignment file or score index")
    elif n_inputs == "two":
        p.add_argument("inputs", nargs=2, metavar="INPUT",
                       help="two alignment files or indexes over the same sources")
    else:
        p.add_argument("inputs", nargs="+", metavar="INPUT",
                       help="one alignment file/index, or two for comparison mode")
    p.add_argument("--format", choices=["auto", "canonical", "block", "index"],
                   default="auto", dest="input_format",
                   help="input format (default: sniff from content)")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="attnscope",
                     description="Score, inspect and compare NMT output by attention")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p_score = sub.add_parser("score", parents=[], help="score a dataset and write an index",
                             description="Parse an alignment dump, score every record, "
                                         "write a score index and print a summary.")
    _add_common_input_args(p_score, "one")
    p_score.add_argument("--refs", dest="refs_path",
                         help="reference file, one sentence per line, aligned by position")
    p_score.add_argument("-o", "--output", dest="output_path",
                         help="index output path (default: INPUT.index)")
    p_score.add_argument("--system", dest="system_name",
                         help="system name stored in the index (default: input file stem)")
    _add_threshold_args(p_score)

    p_top = sub.add_parser("top", help="print the top records under a sort key")
    _add_common_input_args(p_top, "one")
    p_top.add_argument("--refs", dest="refs_path")
    p_top.add_argument("-n", "--count", type=int, default=10, dest="top_n")
    p_top.add_argument("--key", choices=[f.value for f in SortField], default="confidence",
                       dest="sort_key")
    p_top.add_argument("--dir", choices=["asc", "desc"], default="asc", dest="direction")
    p_top.add_argument("--flagged-only", action="store_true",
                       help="print only records with at least one diagnostic flag")
    _add_threshold_args(p_top)

    p_render = sub.add_parser("render", help="render one record (terminal grid or SVG)")
    _add_common_input_args(p_render, "many")
    p_render.add_argument("--id", required=True, dest="record_id",
                          help="record id (with two inputs: system A's record id)")
    p_render.add_argument("--svg", dest="output_path",
                          help="write an SVG file instead of printing a grid")
    p_render.add_argument("--width", type=int, default=100, dest="max_width")
    p_render.add_argument("--color", action="store_true")
    _add_threshold_args(p_render)

    p_serve = sub.add_parser("serve", help="serve the inspection API and UI")
    _add_common_input_args(p_serve, "many")
    p_serve.add_argument("--refs", dest="refs_path")
    p_serve.add_argument("--host", default="127.0.0.1")
    p_serve.add_argument("--port", type=int, default=8000)
    p_serve.add_argument("--ui-dir", dest="ui_dir",
                         help="static UI bundle to serve at / (default: ./frontend/dist if present)")
    _add_threshold_args(p_serve)

    p_cmp = sub.add_parser("compare", help="pair two systems over the same sources")
    _add_common_input_args(p_cmp, "two")
    p_cmp.add_argument("-o", "--output", dest="output_path", required=True,
                       help="paired index output path")
    _add_threshold_args(p_cmp)

    return parser


def _config_from_args(args: argparse.Namespace) -> CliConfig:
    inputs = tuple(getattr(args, "inputs", None) or [args.input])
    thresholds = FlagThresholds(
        low_quality_percent=getattr(args, "low_quality_percent", 30.0),
        untranslated_min_tokens=getattr(args, "untranslated_min_tokens", 10),
        untranslated_overlap_percent=getattr(args, "untranslated_overlap_percent", 50.0),
        divergent_bleu_points=getattr(args, "divergent_bleu_points", 25.0),
        divergent_attention_percent=getattr(args, "divergent_attention_percent", 50.0),
    )
    return CliConfig(
        subcommand=args.subcommand,
        inputs=inputs,
        input_format=getattr(args, "input_format", "auto"),
        refs_path=getattr(args, "refs_path", None),
        output_path=getattr(args, "output_path", None),
        sort_key=getattr(args, "sort_key", "confidence"),
        descending=getattr(args, "direction", "asc") == "desc",
        top_n=getattr(args, "top_n", 10),
        flagged_only=getattr(args, "flagged_only", False),
        record_id=getattr(args, "record_id", None),
        host=getattr(args, "host", "127.0.0.1"),
        port=getattr(args, "port", 8000),
        ui_dir=getattr(args, "ui_dir", None),
        max_width=getattr(args, "max_width", 100),
        color=getattr(args, "color", False),
        system_name=getattr(args, "system_name", None),
        thresholds=thresholds,
    )


def _sniff_format(path: str) -> str:
    with open(path, "rb") as fh:
        first = fh.readline().decode("utf-8", errors="replace")
    if first.startswith("#index\t"):
        return "index"
    if "\t" in first:
        return "canonical"
    return "block"


def _apply_refs(dataset: Dataset, refs_path: str) -> Dataset:
    ref_lines = Path(refs_path).read_text(encoding="utf-8").splitlines()
    if len(ref_lines) != len(dataset.records):
        raise ParseError(
            f"reference file has {len(ref_lines)} lines for "
            f"{len(dataset.records)} records"
        )
    records = []
    for rec, line in zip(dataset.records, ref_lines):
        line = line.strip()
        if not line:
            records.append(rec)
            continue
        if rec.ref_text is not None:
            if rec.ref_text != line:
                print(
                    f"warning: record {rec.id!r} already carries a reference; "
                    "keeping the in-record one",
                    file=sys.stderr,
                )
            records.append(rec)
        else:
            records.append(replace(rec, ref_text=line))
    return replace(dataset, records=tuple(records))


def _load_scored(
    path: str, config: CliConfig, allow_index: bool = True
) -> ScoredDataset:
    """Load raw alignments (scoring them) or a prebuilt index."""
    fmt = config.input_format if config.input_format != "auto" else _sniff_format(path)
    if fmt == "index":
        if not allow_index:
            raise ParseError(f"{path} is already a score index")
        return load_index(path)
    system = config.system_name or Path(path).stem
    with open(path, "rb") as fh:
        if fmt == "canonical":
            dataset = parse_canonical(fh, system_name=system)
        else:
            dataset = parse_block_text(fh, system_name=system)
    if config.refs_path:
        dataset = _apply_refs(dataset, config.refs_path)
    for rec in dataset.records:
        for warning in validate_record(rec):
            print(f"warning: {warning}", file=sys.stderr)
    return score_dataset(dataset, config.thresholds)


def _flag_counts(scored: ScoredDataset) -> Counter:
    counts: Counter = Counter()
    for scores in scored.scores:
        for flag in scores.flags:
            counts[flag.kind.value] += 1
    return counts


def _mean_confidence_percent(scored: ScoredDataset) -> float:
    return sum(s.confidence_percent for s in scored.scores) / len(scored)


def cmd_score(config: CliConfig) -> int:
    path = config.inputs[0]
    scored = _load_scored(path, config, allow_index=False)
    output = config.output_path or path + ".index"
    save_index(scored, output)
    counts = _flag_counts(scored)
    flag_text = " ".join(f"{k}={v}" for k, v in sorted(counts.items())) or "none"
    print(f"{len(scored)} records -> {output}")
    print(f"mean confidence {_mean_confidence_percent(scored):.2f}%  flags: {flag_text}")
    return 0


_TOP_COLUMNS = ("ID", "CONF%", "CDP%", "APOUT%", "APIN%", "OVERLAP%", "BLEU%", "FLAGS")


def _top_row(rec, scores) -> tuple[str, ...]:
    bleu = "-" if scores.bleu_percent is None else f"{scores.bleu_percent:.2f}"
    flags = ",".join(sorted(f.kind.value for f in scores.flags)) or "-"
    return (
        rec.id,
        f"{scores.confidence_percent:.2f}",
        f"{scores.cdp_percent:.2f}",
        f"{scores.ap_out_percent:.2f}",
        f"{scores.ap_in_percent:.2f}",
        f"{scores.overlap_percent:.2f}",
        bleu,
        flags,
    )


def cmd_top(config: CliConfig) -> int:
    scored = _load_scored(config.inputs[0], config)
    order = sort_indices(scored, config.sort_key, config.descending)
    rows = []
    for pos in order:
        if config.flagged_only and not scored.scores[pos].flags:
            continue
        rows.append(_top_row(scored.records[pos], scored.scores[pos]))
        if len(rows) >= config.top_n:
            break
    widths = [
        max(len(_TOP_COLUMNS[c]), *(len(r[c]) for r in rows)) if rows else len(_TOP_COLUMNS[c])
        for c in range(len(_TOP_COLUMNS))
    ]
    print("  ".join(h.ljust(widths[c]) for c, h in enumerate(_TOP_COLUMNS)).rstrip())
    for row in rows:
        print("  ".join(cell.ljust(widths[c]) for c, cell in enumerate(row)).rstrip())
    return 0


def _find_position(scored: ScoredDataset, record_id: str) -> int:
    for pos, rec in enumerate(scored.records):
        if rec.id == record_id:
            return pos
    raise ParseError(f"no record with id {record_id!r}", record_id=record_id)


def cmd_render(config: CliConfig) -> int:
    assert config.record_id is not None
    if len(config.inputs) == 1:
        scored = _load_scored(config.inputs[0], config)
        pos = _find_position(scored, config.record_id)
        if config.output_path:
            svg = render_record_svg(scored.records[pos], scored.scores[pos])
            Path(config.output_path).write_text(svg, encoding="utf-8")
            print(f"wrote {config.output_path}")
        else:
            options = RenderOptions(max_width=config.max_width, color=config.color)
            print(render_matrix_text(scored.records[pos], options), end="")
        return 0
    if len(config.inputs) != 2:
        raise ParseError("render takes one input, or two for a comparison")
    if not config.output_path:
        print("error: comparison rendering requires --svg PATH", file=sys.stderr)
        return USAGE_ERROR
    comparison = _load_comparison(config)
    for pair in comparison.pairs:
        if pair.source_id == config.record_id:
            Path(config.output_path).write_text(render_comparison_svg(pair), encoding="utf-8")
            print(f"wrote {config.output_path}")
            return 0
    raise ParseError(f"no pair with id {config.record_id!r}", record_id=config.record_id)


def _load_comparison(config: CliConfig) -> ComparisonIndex:
    first = config.inputs[0]
    fmt = config.input_format if config.input_format != "auto" else _sniff_format(first)
    if fmt == "index" and len(config.inputs) == 1:
        return load_paired_index(first)
    a = _load_scored(config.inputs[0], replace(config, system_name=None, refs_path=None))
    b = _load_scored(config.inputs[1], replace(config, system_name=None, refs_path=None))
    return ComparisonIndex(a=a, b=b)


def cmd_serve(config: CliConfig) -> int:
    import uvicorn

    if len(config.inputs) == 1:
        fmt = config.input_format if config.input_format != "auto" else _sniff_format(config.inputs[0])
        if fmt == "index":
            with open(config.inputs[0], "rb") as fh:
                head = fh.readline().decode("utf-8").split("\t")
            if len(head) > 2 and head[2] == "paired":
                index: ScoredDataset | ComparisonIndex = load_paired_index(config.inputs[0])
            else:
                index = load_index(config.inputs[0])
        else:
            index = _load_scored(config.inputs[0], config)
    elif len(config.inputs) == 2:
        index = _load_comparison(config)
    else:
        raise ParseError("serve takes one input, or two for comparison mode")
    ui_dir = config.ui_dir
    if ui_dir is None and Path("frontend/dist").is_dir():
        ui_dir = "frontend/dist"
    app = create_app(index, ui_dir=ui_dir)
    uvicorn.run(app, host=config.host, port=config.port, log_level="info")
    return 0


def cmd_compare(config: CliConfig) -> int:
    comparison = _load_comparison(config)
    assert config.output_path is not None
    save_paired_index(comparison, config.output_path)
    a, b = comparison.a, comparison.b
    mean_a = _mean_confidence_percent(a)
    mean_b = _mean_confidence_percent(b)
    a_wins = sum(
        1
        for pair in comparison.pairs
        if pair.scores_a.confidence > pair.scores_b.confidence
    )
    print(f"{len(comparison)} pairs -> {config.output_path}")
    print(f"{a.dataset.system_name}: mean confidence {mean_a:.2f}%")
    print(f"{b.dataset.system_name}: mean confidence {mean_b:.2f}%")
    print(
        f"{a.dataset.system_name} outscores {b.dataset.system_name} "
        f"on {a_wins} of {len(comparison)} pairs (confidence)"
    )
    return 0


_COMMANDS = {
    "score": cmd_score,
    "top": cmd_top,
    "render": cmd_render,
    "serve": cmd_serve,
    "compare": cmd_compare,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    config = _config_from_args(args)
    try:
        return _COMMANDS[config.subcommand](config)
    except (ParseError, PairingError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return DATA_ERROR
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return DATA_ERROR


if __name__ == "__main__":
    sys.exit(main())
