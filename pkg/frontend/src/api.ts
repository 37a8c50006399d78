/**
 * Typed client for the inspection-service JSON API.
 *
 * The UI never computes scores: every number rendered anywhere comes
 * verbatim out of these payloads. Concurrent page fetches are guarded
 * by a monotonically increasing sequence number so a slow response for
 * a superseded query can never clobber a newer one.
 */

export interface PercentScores {
  confidence: number;
  cdp: number;
  ap_out: number;
  ap_in: number;
  overlap: number;
  bleu: number | null;
}

export interface Meta {
  record_count: number;
  system_names: string[];
  has_references: boolean;
  comparison: boolean;
  format_version: number;
  sort_keys: string[];
}

export interface RecordSummary {
  id: string;
  position: number;
  source: string;
  hypothesis: string;
  percent: PercentScores;
  flags: string[];
}

export interface RecordsPage {
  total: number;
  offset: number;
  limit: number;
  records: RecordSummary[];
}

export interface FlagDetail {
  kind: string;
  values: Record<string, number>;
}

export interface MatchSpan {
  src_start: number;
  src_end: number;
  hyp_start: number;
  hyp_end: number;
  length: number;
}

export interface Scores {
  cdp: number;
  ap_out: number;
  ap_in: number;
  similarity: number;
  op: number | null;
  confidence: number;
  bleu: number | null;
  percent: PercentScores;
}

export interface RecordDetail {
  id: string;
  position: number;
  source_tokens: string[];
  hypothesis_tokens: string[];
  source_text: string;
  hypothesis_text: string;
  attention: number[][];
  reference: string | null;
  scores: Scores;
  flags: FlagDetail[];
  match_span?: MatchSpan;
}

export interface SystemDetail extends RecordDetail {
  system: string;
}

export interface ComparisonDetail {
  id: string;
  position: number;
  source_tokens: string[];
  source_text: string;
  a: SystemDetail;
  b: SystemDetail;
}

export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly code: string,
    message: string,
  ) {
    super(message);
  }
}

async function getJson<T>(url: string): Promise<T> {
  const resp = await fetch(url);
  if (!resp.ok) {
    let code = "http_error";
    let message = `${resp.status} for ${url}`;
    try {
      const body = await resp.json();
      if (body && body.detail) {
        code = body.detail.code ?? code;
        message = body.detail.message ?? message;
      }
    } catch {
      // non-JSON error body: keep the defaults
    }
    throw new ApiError(resp.status, code, message);
  }
  return (await resp.json()) as T;
}

export interface PageQuery {
  offset: number;
  limit: number;
  sort: string | null;
  dir: "asc" | "desc";
}

export function recordsUrl(q: PageQuery): string {
  const params = new URLSearchParams();
  params.set("offset", String(q.offset));
  params.set("limit", String(q.limit));
  if (q.sort) {
    params.set("sort", q.sort);
    params.set("dir", q.dir);
  }
  return `/api/records?${params.toString()}`;
}

export class ApiClient {
  private pageSequence = 0;

  meta(): Promise<Meta> {
    return getJson<Meta>("/api/meta");
  }

  /**
   * Fetch one summary page. Resolves to null when a newer page request
   * was issued while this one was in flight (stale response).
   */
  async recordsPage(q: PageQuery): Promise<RecordsPage | null> {
    const seq = ++this.pageSequence;
    const page = await getJson<RecordsPage>(recordsUrl(q));
    return seq === this.pageSequence ? page : null;
  }

  recordDetail(id: string): Promise<RecordDetail> {
    return getJson<RecordDetail>(`/api/record/${encodeURIComponent(id)}`);
  }

  compareDetail(id: string): Promise<ComparisonDetail> {
    return getJson<ComparisonDetail>(`/api/compare/${encodeURIComponent(id)}`);
  }

  /** Id of the record at a given input-order position (for prev/next). */
  async idAtPosition(position: number): Promise<string | null> {
    const page = await getJson<RecordsPage>(
      recordsUrl({ offset: position, limit: 1, sort: null, dir: "asc" }),
    );
    const first = page.records[0];
    return first ? first.id : null;
  }
}
