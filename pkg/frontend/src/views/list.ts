/**
 * Paginated, server-sorted record list. Overlap is drawn as a pink
 * bar, BLEU (when the dataset has references) as a purple bar; both
 * bar widths and all printed numbers come straight from the API
 * payload. Sorting controls re-query the server, never sort locally.
 */

import type { Meta, RecordsPage, RecordSummary } from "../api.js";
import { clear, h, pct } from "../dom.js";
import type { ListViewState } from "../state.js";

export const FLAG_KINDS = [
  "LOW_ATTENTION_QUALITY",
  "POSSIBLE_UNTRANSLATED",
  "REFERENCE_DIVERGENT",
];

export interface ListCallbacks {
  onStateChange(next: Partial<ListViewState>): void;
  onOpenRecord(id: string): void;
}

function bar(kind: "overlap" | "bleu", percent: number): HTMLElement {
  const fill = h("div", { class: `bar-fill bar-${kind}` });
  fill.style.width = `${percent}%`;
  fill.title = pct(percent);
  return h("div", { class: "bar" }, [fill]);
}

function flagBadges(flags: string[]): HTMLElement {
  return h(
    "span",
    { class: "flags" },
    flags.map((f) => h("span", { class: `flag-badge flag-${f}` }, [f])),
  );
}

function row(
  summary: RecordSummary,
  hasBleu: boolean,
  selected: boolean,
  open: (id: string) => void,
): HTMLElement {
  const cells = [
    h("td", { class: "col-id" }, [summary.id]),
    h("td", { class: "col-source" }, [summary.source]),
    h("td", { class: "col-hypothesis" }, [summary.hypothesis]),
    h("td", { class: "col-confidence" }, [pct(summary.percent.confidence)]),
    h("td", { class: "col-overlap" }, [
      bar("overlap", summary.percent.overlap),
      h("span", { class: "bar-label" }, [pct(summary.percent.overlap)]),
    ]),
  ];
  if (hasBleu) {
    cells.push(
      h("td", { class: "col-bleu" }, [
        bar("bleu", summary.percent.bleu ?? 0),
        h("span", { class: "bar-label" }, [pct(summary.percent.bleu)]),
      ]),
    );
  }
  cells.push(h("td", { class: "col-flags" }, [flagBadges(summary.flags)]));
  const tr = h("tr", { class: selected ? "record-row selected" : "record-row" }, cells);
  tr.dataset.recordId = summary.id;
  tr.addEventListener("click", () => open(summary.id));
  return tr;
}

function sortControls(
  meta: Meta,
  state: ListViewState,
  cb: ListCallbacks,
): HTMLElement {
  const select = h("select", { class: "sort-key" }) as HTMLSelectElement;
  select.append(h("option", { value: "" }, ["input order"]));
  for (const key of meta.sort_keys) {
    const opt = h("option", { value: key }, [key]) as HTMLOptionElement;
    if (key === state.sort) opt.selected = true;
    select.append(opt);
  }
  select.addEventListener("change", () => {
    cb.onStateChange({ sort: select.value || null, offset: 0 });
  });

  const dirButton = h("button", { class: "sort-dir" }, [
    state.dir === "asc" ? "ascending" : "descending",
  ]);
  dirButton.addEventListener("click", () => {
    cb.onStateChange({ dir: state.dir === "asc" ? "desc" : "asc", offset: 0 });
  });

  const flagSelect = h("select", { class: "flag-filter" }) as HTMLSelectElement;
  flagSelect.append(h("option", { value: "" }, ["all records"]));
  for (const kind of FLAG_KINDS) {
    const opt = h("option", { value: kind }, [kind]) as HTMLOptionElement;
    if (kind === state.flagFilter) opt.selected = true;
    flagSelect.append(opt);
  }
  flagSelect.addEventListener("change", () => {
    cb.onStateChange({ flagFilter: flagSelect.value || null, offset: 0 });
  });

  return h("div", { class: "controls" }, [
    h("label", {}, ["sort ", select]),
    dirButton,
    h("label", {}, ["show ", flagSelect]),
  ]);
}

function pager(state: ListViewState, total: number, cb: ListCallbacks): HTMLElement {
  const prev = h("button", { class: "pager-prev" }, ["previous"]) as HTMLButtonElement;
  const next = h("button", { class: "pager-next" }, ["next"]) as HTMLButtonElement;
  prev.disabled = state.offset <= 0;
  next.disabled = state.offset + state.limit >= total;
  prev.addEventListener("click", () => {
    cb.onStateChange({ offset: Math.max(0, state.offset - state.limit) });
  });
  next.addEventListener("click", () => {
    cb.onStateChange({ offset: state.offset + state.limit });
  });
  const first = total === 0 ? 0 : state.offset + 1;
  const last = Math.min(state.offset + state.limit, total);
  return h("div", { class: "pager" }, [
    prev,
    h("span", { class: "pager-status" }, [`${first}-${last} of ${total}`]),
    next,
  ]);
}

export function renderList(
  root: HTMLElement,
  meta: Meta,
  page: RecordsPage,
  state: ListViewState,
  cb: ListCallbacks,
): void {
  clear(root);
  const hasBleu = meta.has_references;
  const headers = ["id", "source", "hypothesis", "confidence", "overlap"];
  if (hasBleu) headers.push("BLEU");
  headers.push("flags");

  const shown = state.flagFilter
    ? page.records.filter((r) => r.flags.includes(state.flagFilter as string))
    : page.records;

  const table = h("table", { class: "record-table" }, [
    h("thead", {}, [h("tr", {}, headers.map((t) => h("th", {}, [t])))]),
    h(
      "tbody",
      {},
      shown.map((r) => row(r, hasBleu, r.id === state.selected, cb.onOpenRecord)),
    ),
  ]);

  root.append(
    h("header", { class: "list-header" }, [
      h("h1", {}, [meta.system_names.join(" vs ")]),
      sortControls(meta, state, cb),
    ]),
    table,
    pager(state, page.total, cb),
  );
}

export function renderError(root: HTMLElement, message: string, retry: () => void): void {
  clear(root);
  const button = h("button", { class: "retry" }, ["retry"]);
  button.addEventListener("click", retry);
  root.append(
    h("div", { class: "error-state" }, [
      h("p", {}, [`Could not reach the inspection service: ${message}`]),
      button,
    ]),
  );
}
