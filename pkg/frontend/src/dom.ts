/** Tiny element builder; text content is always set via textContent. */

export function h(
  tag: string,
  attrs: Record<string, string> = {},
  children: (Node | string)[] = [],
): HTMLElement {
  const el = document.createElement(tag);
  for (const [key, value] of Object.entries(attrs)) {
    el.setAttribute(key, value);
  }
  for (const child of children) {
    el.append(typeof child === "string" ? document.createTextNode(child) : child);
  }
  return el;
}

export function clear(el: HTMLElement): void {
  while (el.firstChild) el.removeChild(el.firstChild);
}

/** Display form of an API-provided percent: verbatim value, fixed to
 * two decimals. Never derived from other fields. */
export function pct(value: number | null | undefined): string {
  return value === null || value === undefined ? "–" : `${value.toFixed(2)}%`;
}
