/** Raw text view with sentence-addressable spans.
 *
 * The text is reproduced byte for byte: sentence spans become marked
 * <span> elements and the gaps between them plain text nodes, so
 * highlighting never changes what the reader sees.
 */

import { clear, el } from "./dom.js";
import type { SentencesPayload, TextPayload } from "./types.js";

export function renderText(
  container: HTMLElement,
  text: TextPayload,
  sentences: SentencesPayload,
): void {
  clear(container);
  container.classList.add("rawtext");
  let cursor = 0;
  for (const sentence of sentences.sentences) {
    const [start, end] = sentence.span;
    if (start > cursor) {
      container.appendChild(
        document.createTextNode(text.text.slice(cursor, start)),
      );
    }
    const span = el("span", "sentence");
    span.dataset.sentence = String(sentence.index);
    span.textContent = text.text.slice(start, end);
    container.appendChild(span);
    cursor = end;
  }
  if (cursor < text.text.length) {
    container.appendChild(document.createTextNode(text.text.slice(cursor)));
  }
}
