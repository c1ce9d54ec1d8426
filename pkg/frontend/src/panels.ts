/** Application shell: panel construction and view coordination.
 *
 * One panel per loaded document (treemap, minimap, raw text) plus a
 * single concept list. Every interaction funnels through a ViewState
 * mutation followed by a pure highlight derivation, so views never talk
 * to each other directly.
 */

import { ApiClient, RequestGate } from "./api.js";
import { renderConceptList } from "./conceptlist.js";
import { clear, el, svgEl } from "./dom.js";
import { renderMinimap } from "./minimap.js";
import {
  buildDocIndex,
  clampSlicer,
  deriveHighlights,
  initialViewState,
  maxWorkspaceDepth,
  searchMatchesFromPayload,
  type DocData,
  type HoverTarget,
  type ViewState,
  type Workspace,
} from "./state.js";
import { renderText } from "./textview.js";
import { Tooltip } from "./tooltip.js";
import { renderTreemap } from "./treemap.js";

const ZOOM_STEP = 1.25;
const ZOOM_MIN = 0.05;
const ZOOM_MAX = 50;

export class App {
  state!: ViewState;
  workspace: Workspace = { docs: [], comparison: null };
  tooltip!: Tooltip;

  private readonly gate = new RequestGate();
  private panelHosts = new Map<string, HTMLElement>();
  private listHost!: HTMLElement;
  private noticeHost!: HTMLElement;
  private slicerInput!: HTMLInputElement;

  constructor(
    private readonly root: HTMLElement,
    private readonly api: ApiClient,
  ) {}

  async init(): Promise<void> {
    const documents = await this.api.documents();
    if (documents.length === 0) {
      clear(this.root);
      const empty = el("div", "empty-state");
      empty.appendChild(el("h2", undefined, "No documents loaded"));
      empty.appendChild(
        el(
          "p",
          undefined,
          "Process documents into a workspace and restart the server to explore them here.",
        ),
      );
      this.root.appendChild(empty);
      return;
    }
    const docs: DocData[] = await Promise.all(
      documents.map(async (info) => {
        const [text, sentences, tree, layout] = await Promise.all([
          this.api.text(info.id),
          this.api.sentences(info.id),
          this.api.tree(info.id),
          this.api.layout(info.id),
        ]);
        return {
          id: info.id,
          title: info.title,
          text,
          sentences,
          tree,
          layout,
          index: buildDocIndex(tree),
        };
      }),
    );
    const comparison =
      documents.length > 1 ? await this.api.comparison() : null;
    this.workspace = { docs, comparison };
    this.state = initialViewState(this.workspace);
    this.renderShell();
    this.renderAllPanels();
    this.renderList();
    this.applyHighlights();
  }

  /* ---------------- event entry points ---------------- */

  setHover(target: HoverTarget | null): void {
    this.state.hover = target;
    this.applyHighlights();
  }

  setSlicer(level: number): void {
    this.state.slicerLevel = clampSlicer(level, this.workspace);
    this.slicerInput.value = String(this.state.slicerLevel);
    this.renderAllPanels();
    this.applyHighlights();
  }

  setZoom(docId: string, k: number): void {
    const zoom = this.state.zoom[docId];
    if (zoom === undefined) {
      return;
    }
    zoom.k = Math.min(Math.max(k, ZOOM_MIN), ZOOM_MAX);
    this.renderPanelTreemap(docId);
    this.applyHighlights();
  }

  async runSearch(query: string): Promise<void> {
    this.state.searchQuery = query;
    if (query.trim() === "") {
      this.state.searchMatches = {};
      this.setNotice("");
      this.applyHighlights();
      return;
    }
    const ticket = this.gate.issue("search");
    let payload;
    try {
      payload = await this.api.search(query);
    } catch {
      if (this.gate.isCurrent("search", ticket)) {
        this.setNotice("search failed");
      }
      return;
    }
    // a younger query is already in flight; keep its eventual result
    if (!this.gate.isCurrent("search", ticket)) {
      return;
    }
    this.state.searchMatches = searchMatchesFromPayload(payload);
    this.setNotice(payload.results.length === 0 ? "no results" : "");
    this.applyHighlights();
  }

  /* ---------------- rendering ---------------- */

  private renderShell(): void {
    clear(this.root);
    const header = el("header", "app-header");
    header.appendChild(el("h1", undefined, "ConceptScope"));

    const search = el("input", "search-box") as HTMLInputElement;
    search.type = "search";
    search.placeholder = "search concepts…";
    search.addEventListener("input", () => {
      void this.runSearch(search.value);
    });
    header.appendChild(search);
    this.noticeHost = el("span", "search-notice");
    header.appendChild(this.noticeHost);

    const slicerWrap = el("label", "slicer");
    slicerWrap.appendChild(el("span", undefined, "level"));
    this.slicerInput = el("input") as HTMLInputElement;
    this.slicerInput.type = "range";
    this.slicerInput.min = "0";
    this.slicerInput.max = String(maxWorkspaceDepth(this.workspace));
    this.slicerInput.value = String(this.state.slicerLevel);
    this.slicerInput.addEventListener("input", () => {
      this.setSlicer(Number(this.slicerInput.value));
    });
    slicerWrap.appendChild(this.slicerInput);
    header.appendChild(slicerWrap);
    this.root.appendChild(header);

    const main = el("main", "workspace");
    const panels = el("div", "panels");
    this.panelHosts.clear();
    for (const doc of this.workspace.docs) {
      panels.appendChild(this.buildPanel(doc));
    }
    main.appendChild(panels);
    this.listHost = el("aside", "list-host");
    main.appendChild(this.listHost);
    this.root.appendChild(main);

    this.tooltip = new Tooltip(
      this.root,
      (conceptId) => this.api.concept(conceptId),
      (conceptId) => this.titleFor(conceptId),
    );
  }

  private buildPanel(doc: DocData): HTMLElement {
    const panel = el("section", "panel");
    panel.dataset.doc = doc.id;

    const head = el("header", "panel-header");
    head.appendChild(el("h2", undefined, doc.title));
    const zoomOut = el("button", "zoom-out", "−");
    const zoomIn = el("button", "zoom-in", "+");
    zoomOut.addEventListener("click", () =>
      this.setZoom(doc.id, (this.state.zoom[doc.id]?.k ?? 1) / ZOOM_STEP),
    );
    zoomIn.addEventListener("click", () =>
      this.setZoom(doc.id, (this.state.zoom[doc.id]?.k ?? 1) * ZOOM_STEP),
    );
    head.appendChild(zoomOut);
    head.appendChild(zoomIn);
    panel.appendChild(head);

    const svg = svgEl("svg", { class: "treemap" });
    panel.appendChild(svg);
    svg.addEventListener("mouseover", (event) => {
      const hit = (event.target as Element).closest("[data-concept]");
      if (hit === null) {
        this.setHover(null);
        return;
      }
      this.setHover({
        kind: "concept",
        conceptId: hit.getAttribute("data-concept") ?? "",
      });
    });
    svg.addEventListener("mouseleave", () => this.setHover(null));
    svg.addEventListener("click", (event) => {
      const hit = (event.target as Element).closest("g.node[data-concept]");
      if (hit === null) {
        this.tooltip.hide();
        return;
      }
      void this.tooltip.show(hit.getAttribute("data-concept") ?? "");
    });

    const minimap = el("div");
    panel.appendChild(minimap);
    const rawtext = el("div");
    panel.appendChild(rawtext);
    for (const host of [minimap, rawtext]) {
      host.addEventListener("mouseover", (event) => {
        const hit = (event.target as Element).closest("[data-sentence]");
        if (hit === null) {
          this.setHover(null);
          return;
        }
        this.setHover({
          kind: "sentence",
          docId: doc.id,
          index: Number(hit.getAttribute("data-sentence")),
        });
      });
      host.addEventListener("mouseleave", () => this.setHover(null));
    }

    renderMinimap(minimap, doc.sentences);
    renderText(rawtext, doc.text, doc.sentences);
    this.panelHosts.set(doc.id, panel);
    return panel;
  }

  private renderPanelTreemap(docId: string): void {
    const panel = this.panelHosts.get(docId);
    const doc = this.workspace.docs.find((d) => d.id === docId);
    if (panel === undefined || doc === undefined) {
      return;
    }
    const svg = panel.querySelector("svg.treemap");
    if (svg !== null) {
      renderTreemap(svg as SVGSVGElement, doc, this.state);
    }
  }

  private renderAllPanels(): void {
    for (const doc of this.workspace.docs) {
      this.renderPanelTreemap(doc.id);
    }
  }

  private renderList(): void {
    renderConceptList(
      this.listHost,
      this.workspace,
      (conceptId) =>
        this.setHover(
          conceptId === null ? null : { kind: "concept", conceptId },
        ),
      (conceptId) => void this.tooltip.show(conceptId),
    );
  }

  private titleFor(conceptId: string): string {
    for (const doc of this.workspace.docs) {
      const label = doc.index.labels.get(conceptId);
      if (label !== undefined) {
        return label;
      }
    }
    const tail = conceptId.split(/[/#]/).pop();
    return tail === undefined || tail === "" ? conceptId : tail;
  }

  private setNotice(message: string): void {
    this.noticeHost.textContent = message;
  }

  /* ---------------- highlight application ---------------- */

  private applyHighlights(): void {
    const highlights = deriveHighlights(this.state, this.workspace);
    for (const stale of this.root.querySelectorAll(".hl")) {
      stale.classList.remove("hl");
    }
    for (const [docId, panel] of this.panelHosts) {
      for (const node of panel.querySelectorAll("[data-concept]")) {
        const conceptId = node.getAttribute("data-concept");
        if (conceptId !== null && highlights.conceptIds.has(conceptId)) {
          node.classList.add("hl");
        }
      }
      const sentences = highlights.sentencesByDoc.get(docId);
      if (sentences !== undefined) {
        for (const node of panel.querySelectorAll("[data-sentence]")) {
          if (sentences.has(Number(node.getAttribute("data-sentence")))) {
            node.classList.add("hl");
          }
        }
      }
    }
    for (const entry of this.listHost.querySelectorAll("[data-concept]")) {
      const conceptId = entry.getAttribute("data-concept");
      if (conceptId !== null && highlights.conceptIds.has(conceptId)) {
        entry.classList.add("hl");
      }
    }
  }
}
