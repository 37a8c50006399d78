/**
 * Single-record view: source and hypothesis with the copied span
 * underlined in both exactly when the API response carries a
 * match_span (the server omits it at overlap <= 10%), the reference on
 * a gray background when present, the token-to-token alignment
 * drawing, and all five percent scores verbatim from the payload.
 */

import type { RecordDetail, Scores } from "../api.js";
import { COLOR_SINGLE, alignmentSvg } from "../alignment.js";
import { clear, h, pct } from "../dom.js";

function underlined(
  text: string,
  span: [number, number] | null,
  cssClass: string,
): HTMLElement {
  if (span === null || span[0] === span[1]) {
    return h("p", { class: cssClass }, [text]);
  }
  const [start, end] = span;
  return h("p", { class: cssClass }, [
    text.slice(0, start),
    h("u", { class: "copied-span" }, [text.slice(start, end)]),
    text.slice(end),
  ]);
}

export function scorePanel(scores: Scores, title?: string): HTMLElement {
  const rows: [string, string][] = [
    ["Confidence", pct(scores.percent.confidence)],
    ["CDP", pct(scores.percent.cdp)],
    ["AP_out", pct(scores.percent.ap_out)],
    ["AP_in", pct(scores.percent.ap_in)],
    ["Overlap", pct(scores.percent.overlap)],
  ];
  if (scores.percent.bleu !== null) {
    rows.push(["BLEU", pct(scores.percent.bleu)]);
  }
  const dl = h(
    "dl",
    { class: "scores" },
    rows.flatMap(([label, value]) => [
      h("dt", {}, [label]),
      h("dd", { class: `score-${label.toLowerCase()}` }, [value]),
    ]),
  );
  const children: (HTMLElement | string)[] = title
    ? [h("h3", { class: "panel-title" }, [title]), dl]
    : [dl];
  return h("section", { class: "score-panel" }, children);
}

export function renderDetail(root: HTMLElement, detail: RecordDetail): void {
  clear(root);
  const span = detail.match_span ?? null;

  const srcSpan: [number, number] | null = span
    ? [span.src_start, span.src_end]
    : null;
  const hypSpan: [number, number] | null = span
    ? [span.hyp_start, span.hyp_end]
    : null;

  const textBlock = h("section", { class: "texts" }, [
    h("h3", {}, ["Source"]),
    underlined(detail.source_text, srcSpan, "source-text"),
    h("h3", {}, ["Hypothesis"]),
    underlined(detail.hypothesis_text, hypSpan, "hypothesis-text"),
  ]);
  if (detail.reference !== null) {
    textBlock.append(
      h("h3", {}, ["Reference"]),
      h("p", { class: "reference-text" }, [detail.reference]),
    );
  }

  const flags = h(
    "div",
    { class: "flags" },
    detail.flags.map((f) => h("span", { class: `flag-badge flag-${f.kind}` }, [f.kind])),
  );

  root.append(
    h("header", { class: "detail-header" }, [
      h("a", { href: "#/list", class: "back-link" }, ["← list"]),
      h("h1", {}, [`Record ${detail.id}`]),
      flags,
    ]),
    textBlock,
    scorePanel(detail.scores),
    h("section", { class: "alignment-wrap" }, [
      alignmentSvg(detail.source_tokens, [
        {
          tokens: detail.hypothesis_tokens,
          attention: detail.attention,
          color: COLOR_SINGLE,
          cssClass: "hyp-row",
        },
      ]),
    ]),
  );
}

export function renderNotFound(root: HTMLElement, id: string): void {
  clear(root);
  root.append(
    h("div", { class: "not-found" }, [
      h("p", {}, [`No record with id "${id}".`]),
      h("a", { href: "#/list" }, ["back to the list"]),
    ]),
  );
}
