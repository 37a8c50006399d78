/**
 * Token-to-token alignment drawing: rows of tokens connected by SVG
 * lines whose opacity follows the attention weight, matching the
 * figure style rather than a heatmap grid. Weights at or below the
 * draw threshold are skipped entirely.
 */

const SVG_NS = "http://www.w3.org/2000/svg";
const CHAR_W = 8.2;
const GAP = 14;
const MARGIN = 16;

export const DRAW_THRESHOLD = 0.05;
export const COLOR_SOURCE = "#1c1c1c";
export const COLOR_SINGLE = "#3465a4";
export const COLOR_A = "#e08020"; // system A: orange
export const COLOR_B = "#2e8b57"; // system B: green

interface Row {
  tokens: string[];
  y: number;
  color: string;
  cssClass: string;
}

function centers(tokens: string[]): number[] {
  const out: number[] = [];
  let x = MARGIN;
  for (const tok of tokens) {
    const w = Math.max(1, tok.length) * CHAR_W;
    out.push(x + w / 2);
    x += w + GAP;
  }
  return out;
}

function rowWidth(tokens: string[]): number {
  let x = MARGIN;
  for (const tok of tokens) {
    x += Math.max(1, tok.length) * CHAR_W + GAP;
  }
  return x - GAP + MARGIN;
}

function el(name: string, attrs: Record<string, string>): SVGElement {
  const node = document.createElementNS(SVG_NS, name);
  for (const [key, value] of Object.entries(attrs)) {
    node.setAttribute(key, value);
  }
  return node;
}

function tokenRow(row: Row): SVGElement {
  const group = el("g", { class: row.cssClass, fill: row.color });
  const xs = centers(row.tokens);
  row.tokens.forEach((tok, i) => {
    const text = el("text", {
      x: String(xs[i] ?? MARGIN),
      y: String(row.y),
      "text-anchor": "middle",
      "font-family": "monospace",
      "font-size": "13",
    });
    text.textContent = tok;
    group.append(text);
  });
  return group;
}

/**
 * attention[j][i] connects sourceTokens[i] to row tokens[j]; one line
 * per weight above the threshold, opacity = min(1, weight).
 */
function lineBundle(
  srcTokens: string[],
  srcY: number,
  hyp: Row,
  attention: number[][],
): SVGElement {
  const group = el("g", { class: `${hyp.cssClass}-lines`, stroke: hyp.color });
  const srcX = centers(srcTokens);
  const hypX = centers(hyp.tokens);
  attention.forEach((row, j) => {
    row.forEach((w, i) => {
      if (w > DRAW_THRESHOLD) {
        group.append(
          el("line", {
            x1: String(srcX[i] ?? 0),
            y1: String(srcY + 6),
            x2: String(hypX[j] ?? 0),
            y2: String(hyp.y - 14),
            "stroke-opacity": String(Math.min(1, w)),
          }),
        );
      }
    });
  });
  return group;
}

export interface HypothesisLayer {
  tokens: string[];
  attention: number[][];
  color: string;
  cssClass: string;
}

export function alignmentSvg(sourceTokens: string[], layers: HypothesisLayer[]): SVGElement {
  const srcY = 30;
  const rowPitch = 90;
  const rows: Row[] = layers.map((layer, idx) => ({
    tokens: layer.tokens,
    y: srcY + rowPitch * (idx + 1),
    color: layer.color,
    cssClass: layer.cssClass,
  }));
  const width = Math.max(rowWidth(sourceTokens), ...rows.map((r) => rowWidth(r.tokens)), 200);
  const height = srcY + rowPitch * layers.length + MARGIN;
  const svg = el("svg", {
    class: "alignment",
    viewBox: `0 0 ${Math.ceil(width)} ${height}`,
    width: String(Math.ceil(width)),
    height: String(height),
  });
  layers.forEach((layer, idx) => {
    const row = rows[idx];
    if (row) svg.append(lineBundle(sourceTokens, srcY, row, layer.attention));
  });
  svg.append(tokenRow({ tokens: sourceTokens, y: srcY, color: COLOR_SOURCE, cssClass: "src-row" }));
  for (const row of rows) svg.append(tokenRow(row));
  return svg;
}
