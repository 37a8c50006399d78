import type {
  ComparisonDetail,
  Meta,
  PercentScores,
  RecordDetail,
  RecordsPage,
  RecordSummary,
  Scores,
  SystemDetail,
} from "../src/api.js";

export function percents(over: Partial<PercentScores> = {}): PercentScores {
  return {
    confidence: 47.1,
    cdp: 93.02,
    ap_out: 88.2,
    ap_in: 90.55,
    overlap: 7.3,
    bleu: null,
    ...over,
  };
}

export function scores(over: Partial<Scores> = {}): Scores {
  return {
    cdp: -0.072,
    ap_out: -0.125,
    ap_in: -0.099,
    similarity: 0.073,
    op: null,
    confidence: -0.753,
    bleu: null,
    percent: percents(),
    ...over,
  };
}

export function meta(over: Partial<Meta> = {}): Meta {
  return {
    record_count: 3,
    system_names: ["system_a"],
    has_references: false,
    comparison: false,
    format_version: 1,
    sort_keys: ["confidence", "cdp", "ap_in", "ap_out", "overlap"],
    ...over,
  };
}

export function summary(over: Partial<RecordSummary> = {}): RecordSummary {
  return {
    id: "sent0",
    position: 0,
    source: "the loss was by the team.",
    hypothesis: "zaudējums bija komandas biedrs.",
    percent: percents(),
    flags: [],
    ...over,
  };
}

export function page(records: RecordSummary[], total?: number): RecordsPage {
  return { total: total ?? records.length, offset: 0, limit: 50, records };
}

/** Detail payload whose overlap percent is set directly; the caller
 * decides whether a match_span is present, exactly as the server does. */
export function detail(over: Partial<RecordDetail> = {}): RecordDetail {
  return {
    id: "sent0",
    position: 0,
    source_tokens: ["the", "loss", "was", "by", "the", "team."],
    hypothesis_tokens: ["zaudējums", "bija", "komandas", "biedrs."],
    source_text: "the loss was by the team.",
    hypothesis_text: "zaudējums bija komandas biedrs.",
    attention: [
      [0.8, 0.1, 0.05, 0.0, 0.05, 0.0],
      [0.0, 0.7, 0.2, 0.1, 0.0, 0.0],
      [0.0, 0.1, 0.1, 0.2, 0.2, 0.4],
      [0.1, 0.0, 0.0, 0.0, 0.1, 0.8],
    ],
    reference: null,
    scores: scores(),
    flags: [],
    ...over,
  };
}

function systemDetail(system: string, over: Partial<RecordDetail> = {}): SystemDetail {
  return { system, ...detail(over) };
}

/** A Fig-3-style pair: one source, two hypotheses from two systems. */
export function comparison(): ComparisonDetail {
  const base = detail();
  return {
    id: "sent0",
    position: 0,
    source_tokens: base.source_tokens,
    source_text: base.source_text,
    a: systemDetail("system_a", {
      hypothesis_tokens: ["zaudējums", "bija", "komandas", "biedrs."],
    }),
    b: systemDetail("system_b", {
      hypothesis_tokens: ["šis", "zaudējums", "bija", "komandai."],
      attention: [
        [0.1, 0.2, 0.1, 0.1, 0.3, 0.2],
        [0.7, 0.2, 0.05, 0.0, 0.05, 0.0],
        [0.0, 0.6, 0.3, 0.1, 0.0, 0.0],
        [0.0, 0.1, 0.2, 0.3, 0.1, 0.3],
      ],
      scores: scores({ percent: percents({ confidence: 28.63, overlap: 94.03 }) }),
    }),
  };
}
