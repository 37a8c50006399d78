// Secondary acceptance: the comparison view's two color-coded rows and panels.

import { beforeEach, describe, expect, it, vi } from "vitest";

import { COLOR_A, COLOR_B } from "../src/alignment.js";
import { renderCompare, renderModeConflict } from "../src/views/compare.js";
import { comparison } from "./fixtures.js";

let root: HTMLElement;

beforeEach(() => {
  document.body.innerHTML = '<div id="app"></div>';
  root = document.getElementById("app") as HTMLElement;
});

describe("comparison view", () => {
  it("renders two color-coded hypothesis rows under the source row", () => {
    renderCompare(root, comparison(), { onNavigate: () => {} });
    const a = root.querySelector("g.hyp-a");
    const b = root.querySelector("g.hyp-b");
    expect(a?.getAttribute("fill")).toBe(COLOR_A);
    expect(b?.getAttribute("fill")).toBe(COLOR_B);
    expect([...(a?.querySelectorAll("text") ?? [])].map((t) => t.textContent)).toEqual([
      "zaudējums", "bija", "komandas", "biedrs.",
    ]);
    expect([...(b?.querySelectorAll("text") ?? [])].map((t) => t.textContent)).toEqual([
      "šis", "zaudējums", "bija", "komandai.",
    ]);
    const srcRow = root.querySelector("g.src-row");
    expect(srcRow).not.toBeNull();
  });

  it("alignment line bundles match their hypothesis color", () => {
    renderCompare(root, comparison(), { onNavigate: () => {} });
    expect(root.querySelector("g.hyp-a-lines")?.getAttribute("stroke")).toBe(COLOR_A);
    expect(root.querySelector("g.hyp-b-lines")?.getAttribute("stroke")).toBe(COLOR_B);
  });

  it("shows both score panels with their system names and numbers", () => {
    renderCompare(root, comparison(), { onNavigate: () => {} });
    const panels = root.querySelectorAll(".score-panel");
    expect(panels.length).toBe(2);
    expect(panels[0]?.querySelector(".panel-title")?.textContent).toBe("system_a");
    expect(panels[1]?.querySelector(".panel-title")?.textContent).toBe("system_b");
    expect(panels[0]?.querySelector(".score-confidence")?.textContent).toBe("47.10%");
    expect(panels[1]?.querySelector(".score-confidence")?.textContent).toBe("28.63%");
    expect(panels[1]?.querySelector(".score-overlap")?.textContent).toBe("94.03%");
  });

  it("navigation buttons fire the callback", () => {
    const onNavigate = vi.fn();
    renderCompare(root, comparison(), { onNavigate });
    (root.querySelector(".pair-next") as HTMLElement).click();
    (root.querySelector(".pair-prev") as HTMLElement).click();
    expect(onNavigate.mock.calls).toEqual([[1], [-1]]);
  });
});

describe("mode conflict view", () => {
  it("explains and links back", () => {
    renderModeConflict(root);
    expect(root.textContent).toContain("single dataset");
    expect(root.querySelector('a[href="#/list"]')).not.toBeNull();
  });
});
