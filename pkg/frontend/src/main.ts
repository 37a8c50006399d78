/**
 * Router/bootstrapping: the URL fragment drives everything. Each
 * hashchange decodes the fragment, fetches what the view needs
 * asynchronously, and re-renders; list pages in flight are superseded
 * by newer requests (sequence-guarded in the client).
 */

import { ApiClient, ApiError } from "./api.js";
import type { Meta } from "./api.js";
import { DEFAULT_LIST, decodeState, encodeState } from "./state.js";
import type { ListViewState } from "./state.js";
import { renderCompare, renderModeConflict } from "./views/compare.js";
import { renderDetail, renderNotFound } from "./views/detail.js";
import { renderError, renderList } from "./views/list.js";

export class App {
  private meta: Meta | null = null;
  private currentCount = 0;

  constructor(
    private readonly root: HTMLElement,
    private readonly api: ApiClient = new ApiClient(),
  ) {}

  start(): void {
    window.addEventListener("hashchange", () => void this.load());
    window.addEventListener("keydown", (ev) => this.onKey(ev));
    void this.load();
  }

  private setState(fragment: string): void {
    window.location.hash = fragment;
  }

  async load(): Promise<void> {
    const state = decodeState(window.location.hash || "#/list");
    try {
      this.meta ??= await this.api.meta();
      this.currentCount = this.meta.record_count;
      if (state.view === "record") {
        await this.showRecord(state.id);
      } else if (state.view === "compare") {
        await this.showCompare(state.id);
      } else {
        await this.showList(state);
      }
    } catch (err) {
      renderError(this.root, err instanceof Error ? err.message : String(err), () => {
        this.meta = null;
        void this.load();
      });
    }
  }

  private async showList(state: ListViewState): Promise<void> {
    const meta = this.meta as Meta;
    const page = await this.api.recordsPage({
      offset: state.offset,
      limit: state.limit,
      sort: state.sort,
      dir: state.dir,
    });
    if (page === null) return; // superseded by a newer request
    renderList(this.root, meta, page, state, {
      onStateChange: (next) => {
        this.setState(encodeState({ ...state, ...next, view: "list" }));
      },
      onOpenRecord: (id) => {
        const target = meta.comparison
          ? encodeState({ view: "compare", id })
          : encodeState({ view: "record", id });
        this.setState(target);
      },
    });
  }

  private async showRecord(id: string): Promise<void> {
    try {
      renderDetail(this.root, await this.api.recordDetail(id));
    } catch (err) {
      if (err instanceof ApiError && err.status === 404) {
        renderNotFound(this.root, id);
        return;
      }
      throw err;
    }
  }

  private async showCompare(id: string): Promise<void> {
    try {
      const detail = await this.api.compareDetail(id);
      renderCompare(this.root, detail, {
        onNavigate: (delta) => void this.navigatePair(detail.position, delta),
      });
    } catch (err) {
      if (err instanceof ApiError && err.status === 409) {
        renderModeConflict(this.root);
        return;
      }
      if (err instanceof ApiError && err.status === 404) {
        renderNotFound(this.root, id);
        return;
      }
      throw err;
    }
  }

  /** Step to the neighbouring pair by input position, wrapping at the ends. */
  async navigatePair(position: number, delta: 1 | -1): Promise<void> {
    if (this.currentCount < 1) return;
    const target = (position + delta + this.currentCount) % this.currentCount;
    const id = await this.api.idAtPosition(target);
    if (id !== null) {
      this.setState(encodeState({ view: "compare", id }));
    }
  }

  private onKey(ev: KeyboardEvent): void {
    const state = decodeState(window.location.hash || "#/list");
    if (state.view !== "compare") return;
    if (ev.key === "ArrowRight" || ev.key === "ArrowLeft") {
      const delta = ev.key === "ArrowRight" ? 1 : -1;
      const nav = this.root.querySelector(delta === 1 ? ".pair-next" : ".pair-prev");
      if (nav instanceof HTMLElement) nav.click();
      ev.preventDefault();
    }
  }
}

export function boot(): void {
  const root = document.getElementById("app");
  if (root) {
    if (!window.location.hash) {
      window.location.hash = encodeState(DEFAULT_LIST);
    }
    new App(root).start();
  }
}

if (typeof document !== "undefined" && document.getElementById("app")) {
  boot();
}
