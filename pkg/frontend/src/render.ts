/**
 * Pure highlight rendering: text plus entity spans in, HTML string out.
 *
 * The emitted markup contains the submitted text as its only text nodes.
 * Entity type and score live in attributes (the badge is drawn by CSS from
 * data-type), so stripping tags always reconstructs the input exactly.
 */

import type { PredictResponse, SpanOut, TokenOut } from "./types.js";

export interface Rendered {
  html: string;
  /** set when span offsets were unusable and the raw text was shown instead */
  warning: string | null;
}

export function escapeHtml(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;")
    .replace(/'/g, "&#39;");
}

/** Deterministic per-type color: hash the name onto the hue wheel. */
export function typeColor(entityType: string): string {
  let hash = 0;
  for (let i = 0; i < entityType.length; i++) {
    hash = (hash * 31 + entityType.charCodeAt(i)) >>> 0;
  }
  return `hsl(${hash % 360}, 70%, 82%)`;
}

interface CharSpan {
  start: number;
  end: number;
  span: SpanOut;
}

function toCharSpans(
  text: string,
  tokens: TokenOut[],
  spans: SpanOut[]
): CharSpan[] | null {
  const resolved: CharSpan[] = [];
  for (const span of spans) {
    if (
      !Number.isInteger(span.start_token) ||
      !Number.isInteger(span.end_token) ||
      span.start_token < 0 ||
      span.end_token > tokens.length ||
      span.start_token >= span.end_token
    ) {
      return null;
    }
    const start = tokens[span.start_token].start_char;
    const end = tokens[span.end_token - 1].end_char;
    if (start < 0 || end > text.length || start >= end) {
      return null;
    }
    resolved.push({ start, end, span });
  }
  resolved.sort((a, b) => a.start - b.start);
  for (let i = 1; i < resolved.length; i++) {
    if (resolved[i].start < resolved[i - 1].end) {
      return null; // overlapping spans cannot be nested flat marks
    }
  }
  return resolved;
}

export function renderHighlights(text: string, response: PredictResponse): Rendered {
  const charSpans = toCharSpans(text, response.tokens, response.spans);
  if (charSpans === null) {
    return {
      html: escapeHtml(text),
      warning: "response contained out-of-range span offsets; showing plain text",
    };
  }
  const parts: string[] = [];
  let cursor = 0;
  for (const { start, end, span } of charSpans) {
    parts.push(escapeHtml(text.slice(cursor, start)));
    const color = typeColor(span.type);
    const title = `${span.type} · score ${span.score.toFixed(3)}`;
    parts.push(
      `<mark class="ent" style="background:${color}" data-type="${escapeHtml(span.type)}" ` +
        `title="${escapeHtml(title)}">${escapeHtml(text.slice(start, end))}</mark>`
    );
    cursor = end;
  }
  parts.push(escapeHtml(text.slice(cursor)));
  return { html: parts.join(""), warning: null };
}
