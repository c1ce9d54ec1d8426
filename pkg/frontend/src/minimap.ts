/** Transcript minimap: one horizontal line per sentence.
 *
 * Line widths scale with sentence length relative to the longest
 * sentence, giving a compact silhouette of the document that the
 * coordinated highlight can mark up.
 */

import { clear, el } from "./dom.js";
import type { SentencesPayload } from "./types.js";

export function renderMinimap(
  container: HTMLElement,
  sentences: SentencesPayload,
): void {
  clear(container);
  container.classList.add("minimap");
  const longest = Math.max(
    1,
    ...sentences.sentences.map((s) => s.span[1] - s.span[0]),
  );
  for (const sentence of sentences.sentences) {
    const line = el("div", "minimap-line");
    line.dataset.sentence = String(sentence.index);
    const length = sentence.span[1] - sentence.span[0];
    line.style.width = `${(100 * length) / longest}%`;
    line.title = sentence.text;
    container.appendChild(line);
  }
}
