/** Concept card tooltip shown on click.
 *
 * The card renders every field of the /concepts/{id} payload. Each row
 * carries the raw field value as JSON in a data attribute so the visible
 * card and the payload can be compared mechanically, and related
 * concepts are links that load their own card without needing to occur
 * in any document. External links open in a new context.
 */

import { clear, el } from "./dom.js";
import type { ConceptPayload } from "./types.js";

export type ConceptFetcher = (conceptId: string) => Promise<ConceptPayload>;

const FIELD_ORDER: (keyof ConceptPayload)[] = [
  "id",
  "label",
  "synonyms",
  "same_as",
  "parents",
  "siblings",
  "occurrences",
];

export class Tooltip {
  readonly root: HTMLElement;
  private ticket = 0;

  constructor(
    host: HTMLElement,
    private readonly fetchConcept: ConceptFetcher,
    private readonly titleFor: (conceptId: string) => string,
  ) {
    this.root = el("div", "tooltip");
    this.root.hidden = true;
    host.appendChild(this.root);
  }

  hide(): void {
    this.root.hidden = true;
    this.ticket += 1;
  }

  async show(conceptId: string): Promise<void> {
    const ticket = ++this.ticket;
    this.root.hidden = false;
    clear(this.root);
    this.root.appendChild(el("div", "tooltip-loading", "loading…"));
    let payload: ConceptPayload;
    try {
      payload = await this.fetchConcept(conceptId);
    } catch (error) {
      if (ticket !== this.ticket) {
        return;
      }
      clear(this.root);
      this.root.appendChild(
        el(
          "div",
          "tooltip-error",
          `could not load concept: ${error instanceof Error ? error.message : String(error)}`,
        ),
      );
      return;
    }
    // a younger show() or hide() superseded this request; drop it
    if (ticket !== this.ticket) {
      return;
    }
    clear(this.root);
    this.renderCard(payload);
  }

  private renderCard(payload: ConceptPayload): void {
    const card = el("div", "concept-card");
    card.dataset.concept = payload.id;
    const heading = el("h4", "card-title", payload.label);
    card.appendChild(heading);

    const definition = el("a", "definition-link", "definition");
    definition.href = payload.id;
    definition.target = "_blank";
    definition.rel = "noopener";
    card.appendChild(definition);

    for (const field of FIELD_ORDER) {
      card.appendChild(this.renderField(field, payload[field]));
    }
    this.root.appendChild(card);
  }

  private renderField(field: keyof ConceptPayload, value: unknown): HTMLElement {
    const row = el("div", "card-field");
    row.dataset.field = field;
    row.dataset.json = JSON.stringify(value);
    row.appendChild(el("span", "field-name", field.replace("_", " ")));
    const body = el("span", "field-value");
    if (field === "parents" || field === "siblings") {
      for (const related of value as string[]) {
        const link = el("a", "related-link", this.titleFor(related));
        link.href = "#";
        link.dataset.concept = related;
        link.addEventListener("click", (event) => {
          event.preventDefault();
          void this.show(related);
        });
        body.appendChild(link);
      }
    } else if (field === "same_as") {
      for (const uri of value as string[]) {
        const link = el("a", "external-link", uri);
        link.href = uri;
        link.target = "_blank";
        link.rel = "noopener";
        body.appendChild(link);
      }
    } else if (field === "occurrences") {
      const occurrences = value as ConceptPayload["occurrences"];
      for (const [docId, occ] of Object.entries(occurrences)) {
        body.appendChild(
          el(
            "span",
            "occurrence",
            `${docId}: ${occ.frequency} in sentence(s) ${occ.sentences.join(", ")}`,
          ),
        );
      }
    } else {
      body.textContent = Array.isArray(value) ? value.join(", ") : String(value);
    }
    row.appendChild(body);
    return row;
  }
}
