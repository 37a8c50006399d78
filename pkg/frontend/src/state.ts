/**
 * View state <-> URL fragment. The fragment is the single source of
 * truth for what is on screen, so any view can be bookmarked or pasted
 * into another tab and reproduce itself exactly.
 *
 * Shapes:
 *   #/list?sort=confidence&dir=asc&offset=0&limit=50&flag=KIND&selected=id
 *   #/record/<encoded id>
 *   #/compare/<encoded id>
 */

export interface ListViewState {
  view: "list";
  sort: string | null;
  dir: "asc" | "desc";
  offset: number;
  limit: number;
  flagFilter: string | null;
  selected: string | null;
}

export interface RecordViewState {
  view: "record";
  id: string;
}

export interface CompareViewState {
  view: "compare";
  id: string;
}

export type ViewState = ListViewState | RecordViewState | CompareViewState;

export const DEFAULT_LIST: ListViewState = {
  view: "list",
  sort: null,
  dir: "asc",
  offset: 0,
  limit: 50,
  flagFilter: null,
  selected: null,
};

export function encodeState(state: ViewState): string {
  if (state.view === "record") {
    return `#/record/${encodeURIComponent(state.id)}`;
  }
  if (state.view === "compare") {
    return `#/compare/${encodeURIComponent(state.id)}`;
  }
  const params = new URLSearchParams();
  if (state.sort) {
    params.set("sort", state.sort);
    params.set("dir", state.dir);
  }
  if (state.offset !== 0) params.set("offset", String(state.offset));
  if (state.limit !== DEFAULT_LIST.limit) params.set("limit", String(state.limit));
  if (state.flagFilter) params.set("flag", state.flagFilter);
  if (state.selected) params.set("selected", state.selected);
  const query = params.toString();
  return query ? `#/list?${query}` : "#/list";
}

function intOr(value: string | null, fallback: number): number {
  if (value === null) return fallback;
  const parsed = Number.parseInt(value, 10);
  return Number.isFinite(parsed) && parsed >= 0 ? parsed : fallback;
}

export function decodeState(fragment: string): ViewState {
  const hash = fragment.startsWith("#") ? fragment.slice(1) : fragment;
  const recordMatch = hash.match(/^\/record\/(.*)$/);
  if (recordMatch !== null) {
    return { view: "record", id: decodeURIComponent(recordMatch[1] ?? "") };
  }
  const compareMatch = hash.match(/^\/compare\/(.*)$/);
  if (compareMatch !== null) {
    return { view: "compare", id: decodeURIComponent(compareMatch[1] ?? "") };
  }
  const queryStart = hash.indexOf("?");
  const params = new URLSearchParams(queryStart >= 0 ? hash.slice(queryStart + 1) : "");
  const dir = params.get("dir") === "desc" ? "desc" : "asc";
  return {
    view: "list",
    sort: params.get("sort"),
    dir,
    offset: intOr(params.get("offset"), 0),
    limit: Math.max(1, Math.min(500, intOr(params.get("limit"), DEFAULT_LIST.limit))),
    flagFilter: params.get("flag"),
    selected: params.get("selected"),
  };
}
