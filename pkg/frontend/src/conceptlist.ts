/** Concept list widget: list, legend, and per-document bar charts.
 *
 * Rendered once for the whole workspace. Concepts are grouped under
 * their top-level parent so related branches read together, each entry
 * carries the branch color used by the treemaps, and with more than one
 * document loaded a sparkline shows the per-document frequencies.
 */

import { clear, el, svgEl } from "./dom.js";
import type { Workspace } from "./state.js";

export interface ConceptListEntry {
  conceptId: string;
  label: string;
  color: string | null;
  total: number;
  vector: number[];
}

interface Group {
  ancestorId: string;
  ancestorLabel: string;
  entries: ConceptListEntry[];
}

const SPARK_WIDTH = 48;
const SPARK_HEIGHT = 14;

export function collectGroups(workspace: Workspace): Group[] {
  const colorOf = new Map<string, string>();
  for (const doc of workspace.docs) {
    for (const circle of doc.layout.circles) {
      if (!colorOf.has(circle.id)) {
        colorOf.set(circle.id, circle.color);
      }
    }
  }
  const groups = new Map<string, Group>();
  const seen = new Set<string>();
  for (const doc of workspace.docs) {
    for (const conceptId of doc.index.detected) {
      if (seen.has(conceptId)) {
        continue;
      }
      seen.add(conceptId);
      const ancestorId = doc.index.topAncestor.get(conceptId) ?? conceptId;
      let group = groups.get(ancestorId);
      if (group === undefined) {
        group = {
          ancestorId,
          ancestorLabel: doc.index.labels.get(ancestorId) ?? ancestorId,
          entries: [],
        };
        groups.set(ancestorId, group);
      }
      // the server's comparison vectors are authoritative; per-document
      // tree frequencies cover the single-document case
      const vector =
        workspace.comparison?.vectors[conceptId] ??
        workspace.docs.map((d) => d.index.frequency.get(conceptId) ?? 0);
      group.entries.push({
        conceptId,
        label: doc.index.labels.get(conceptId) ?? conceptId,
        color: colorOf.get(conceptId) ?? null,
        total: vector.reduce((a, b) => a + b, 0),
        vector,
      });
    }
  }
  const ordered = [...groups.values()];
  ordered.sort((a, b) => a.ancestorLabel.localeCompare(b.ancestorLabel));
  for (const group of ordered) {
    group.entries.sort((a, b) => b.total - a.total || a.label.localeCompare(b.label));
  }
  return ordered;
}

function sparkline(vector: number[]): SVGSVGElement {
  const svg = svgEl("svg", {
    class: "sparkline",
    width: SPARK_WIDTH,
    height: SPARK_HEIGHT,
    viewBox: `0 0 ${SPARK_WIDTH} ${SPARK_HEIGHT}`,
  });
  const peak = Math.max(1, ...vector);
  const slot = SPARK_WIDTH / vector.length;
  vector.forEach((value, i) => {
    const height = (SPARK_HEIGHT - 2) * (value / peak);
    svg.appendChild(
      svgEl("rect", {
        class: "spark-bar",
        x: i * slot + 1,
        y: SPARK_HEIGHT - height,
        width: Math.max(1, slot - 2),
        height,
        "data-doc-index": i,
        "data-value": value,
      }),
    );
  });
  return svg;
}

export function renderConceptList(
  container: HTMLElement,
  workspace: Workspace,
  onHover: (conceptId: string | null) => void,
  onSelect: (conceptId: string, anchor: HTMLElement) => void,
): void {
  clear(container);
  container.classList.add("concept-list");
  const showSparklines = workspace.docs.length > 1;
  for (const group of collectGroups(workspace)) {
    const section = el("section", "concept-group");
    section.dataset.ancestor = group.ancestorId;
    section.appendChild(el("h3", "group-title", group.ancestorLabel));
    const list = el("ul");
    for (const entry of group.entries) {
      const item = el("li", "concept-entry");
      item.dataset.concept = entry.conceptId;
      const swatch = el("span", "swatch");
      if (entry.color !== null) {
        swatch.style.backgroundColor = entry.color;
      }
      item.appendChild(swatch);
      item.appendChild(el("span", "concept-label", entry.label));
      item.appendChild(el("span", "concept-total", String(entry.total)));
      if (showSparklines) {
        item.appendChild(sparkline(entry.vector));
      }
      item.addEventListener("mouseenter", () => onHover(entry.conceptId));
      item.addEventListener("mouseleave", () => onHover(null));
      item.addEventListener("click", () => onSelect(entry.conceptId, item));
      list.appendChild(item);
    }
    section.appendChild(list);
    container.appendChild(section);
  }
}
