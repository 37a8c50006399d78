// Secondary acceptance: the underline rule and the verbatim-numbers rule.

import { beforeEach, describe, expect, it } from "vitest";

import { renderDetail, renderNotFound } from "../src/views/detail.js";
import { detail, percents, scores } from "./fixtures.js";

let root: HTMLElement;

beforeEach(() => {
  document.body.innerHTML = '<div id="app"></div>';
  root = document.getElementById("app") as HTMLElement;
});

describe("underline rule", () => {
  it("shows no underline at overlap 9% (no match_span in the payload)", () => {
    const payload = detail({
      scores: scores({ percent: percents({ overlap: 9.0 }) }),
      // server omits match_span at overlap <= 10%
    });
    renderDetail(root, payload);
    expect(root.querySelectorAll("u.copied-span").length).toBe(0);
  });

  it("underlines source and hypothesis at overlap 11%", () => {
    const payload = detail({
      source_text: "see 0,8 mg/ml pudelis",
      hypothesis_text: "на 0,8 mg/ml бутылке",
      scores: scores({ percent: percents({ overlap: 11.0 }) }),
      match_span: { src_start: 4, src_end: 13, hyp_start: 3, hyp_end: 12, length: 9 },
    });
    renderDetail(root, payload);
    const marks = root.querySelectorAll("u.copied-span");
    expect(marks.length).toBe(2);
    expect(root.querySelector(".source-text u.copied-span")?.textContent).toBe("0,8 mg/ml");
    expect(root.querySelector(".hypothesis-text u.copied-span")?.textContent).toBe("0,8 mg/ml");
  });

  it("mirrors match_span presence exactly, whatever the percent says", () => {
    // the UI must not re-derive the rule from the overlap number
    const withSpan = detail({
      scores: scores({ percent: percents({ overlap: 9.0 }) }),
      match_span: { src_start: 0, src_end: 3, hyp_start: 0, hyp_end: 3, length: 3 },
    });
    renderDetail(root, withSpan);
    expect(root.querySelectorAll("u.copied-span").length).toBe(2);
  });
});

describe("numbers come verbatim from the API", () => {
  it("renders the payload's percents", () => {
    renderDetail(root, detail());
    expect(root.querySelector(".score-confidence")?.textContent).toBe("47.10%");
    expect(root.querySelector(".score-overlap")?.textContent).toBe("7.30%");
  });

  it("a mutated payload changes the display correspondingly", () => {
    const mutated = detail({
      scores: scores({
        percent: percents({ confidence: 3.33, cdp: 61.0, overlap: 99.9 }),
      }),
    });
    renderDetail(root, mutated);
    expect(root.querySelector(".score-confidence")?.textContent).toBe("3.33%");
    expect(root.querySelector(".score-cdp")?.textContent).toBe("61.00%");
    expect(root.querySelector(".score-overlap")?.textContent).toBe("99.90%");
  });

  it("shows BLEU only when the payload carries it", () => {
    renderDetail(root, detail());
    expect(root.querySelector(".score-bleu")).toBeNull();
    renderDetail(
      root,
      detail({ scores: scores({ bleu: 0.42, percent: percents({ bleu: 42.0 }) }) }),
    );
    expect(root.querySelector(".score-bleu")?.textContent).toBe("42.00%");
  });
});

describe("reference panel", () => {
  it("absent without a reference, gray panel with one", () => {
    renderDetail(root, detail());
    expect(root.querySelector(".reference-text")).toBeNull();
    renderDetail(root, detail({ reference: "zaudē komanda." }));
    expect(root.querySelector(".reference-text")?.textContent).toBe("zaudē komanda.");
  });
});

describe("alignment drawing", () => {
  it("renders every token once and lines only above the threshold", () => {
    const payload = detail();
    renderDetail(root, payload);
    const srcTexts = [...root.querySelectorAll("g.src-row text")].map((t) => t.textContent);
    const hypTexts = [...root.querySelectorAll("g.hyp-row text")].map((t) => t.textContent);
    expect(srcTexts).toEqual(payload.source_tokens);
    expect(hypTexts).toEqual(payload.hypothesis_tokens);
    const expected = payload.attention.flat().filter((w) => w > 0.05).length;
    expect(root.querySelectorAll("g.hyp-row-lines line").length).toBe(expected);
  });
});

describe("not found view", () => {
  it("renders a way back", () => {
    renderNotFound(root, "zzz");
    expect(root.textContent).toContain('No record with id "zzz"');
    expect(root.querySelector('a[href="#/list"]')).not.toBeNull();
  });
});
