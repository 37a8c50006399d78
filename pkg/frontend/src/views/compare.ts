/**
 * Two-system view: shared source row on top, system A's hypothesis in
 * orange and system B's in green beneath it, alignment lines color-
 * matched to their hypothesis row, and the two score panels side by
 * side. Left/right arrows step through pairs, wrapping at the ends.
 */

import type { ComparisonDetail } from "../api.js";
import { COLOR_A, COLOR_B, alignmentSvg } from "../alignment.js";
import { clear, h } from "../dom.js";
import { scorePanel } from "./detail.js";

export interface CompareCallbacks {
  onNavigate(delta: 1 | -1): void;
}

export function renderCompare(
  root: HTMLElement,
  detail: ComparisonDetail,
  cb: CompareCallbacks,
): void {
  clear(root);

  const prev = h("button", { class: "pair-prev", title: "previous pair (←)" }, ["←"]);
  const next = h("button", { class: "pair-next", title: "next pair (→)" }, ["→"]);
  prev.addEventListener("click", () => cb.onNavigate(-1));
  next.addEventListener("click", () => cb.onNavigate(1));

  root.append(
    h("header", { class: "compare-header" }, [
      h("a", { href: "#/list", class: "back-link" }, ["← list"]),
      h("h1", {}, [`Pair ${detail.id}`]),
      h("div", { class: "pair-nav" }, [prev, next]),
    ]),
    h("section", { class: "alignment-wrap" }, [
      alignmentSvg(detail.source_tokens, [
        {
          tokens: detail.a.hypothesis_tokens,
          attention: detail.a.attention,
          color: COLOR_A,
          cssClass: "hyp-a",
        },
        {
          tokens: detail.b.hypothesis_tokens,
          attention: detail.b.attention,
          color: COLOR_B,
          cssClass: "hyp-b",
        },
      ]),
    ]),
    h("section", { class: "panels" }, [
      scorePanel(detail.a.scores, detail.a.system),
      scorePanel(detail.b.scores, detail.b.system),
    ]),
  );
}

export function renderModeConflict(root: HTMLElement): void {
  clear(root);
  root.append(
    h("div", { class: "mode-conflict" }, [
      h("p", {}, [
        "This service hosts a single dataset; the comparison view needs ",
        "two inputs (start the server with two alignment files).",
      ]),
      h("a", { href: "#/list" }, ["back to the list"]),
    ]),
  );
}
