import { beforeEach, describe, expect, it } from "vitest";

import type { ComparisonPayload, DocumentInfo } from "../src/types";
import {
  fixture,
  highlightSnapshot,
  hover,
  mountApp,
  panelFor,
  TOPIC,
  type Mounted,
} from "./helpers";

const ML = TOPIC("machine_learning");

function circleNode(panel: HTMLElement, conceptId: string): Element {
  const node = panel.querySelector(`g.node[data-concept="${conceptId}"]`);
  if (node === null) {
    throw new Error(`no circle for ${conceptId}`);
  }
  return node;
}

describe("coordinated highlighting", () => {
  let mounted: Mounted;
  let docs: DocumentInfo[];

  beforeEach(async () => {
    document.body.innerHTML = "";
    mounted = await mountApp();
    docs = fixture<DocumentInfo[]>("documents.json");
  });

  it("round-trips a hover on a shared concept through every view", () => {
    const { root } = mounted;
    const comparison = fixture<ComparisonPayload>("comparison.json");
    expect(comparison.shared).toContain(ML);

    const firstPanel = panelFor(root, docs[0]!.id);
    hover(circleNode(firstPanel, ML));

    // concept list entry
    const listEntry = root.querySelector(`.concept-entry[data-concept="${ML}"]`);
    expect(listEntry?.classList.contains("hl")).toBe(true);

    // sentences in the hovered document's minimap and raw text
    for (const index of [0, 1]) {
      const line = firstPanel.querySelector(
        `.minimap-line[data-sentence="${index}"]`,
      );
      expect(line?.classList.contains("hl")).toBe(true);
      const span = firstPanel.querySelector(
        `.rawtext .sentence[data-sentence="${index}"]`,
      );
      expect(span?.classList.contains("hl")).toBe(true);
    }
    const unrelated = firstPanel.querySelector(
      '.minimap-line[data-sentence="2"]',
    );
    expect(unrelated?.classList.contains("hl")).toBe(false);

    // the same concept's circle in every other panel
    for (const doc of docs.slice(1)) {
      const other = panelFor(root, doc.id);
      expect(circleNode(other, ML).classList.contains("hl")).toBe(true);
    }
  });

  it("clears all highlights when hovering whitespace", () => {
    const { root } = mounted;
    const firstPanel = panelFor(root, docs[0]!.id);
    hover(circleNode(firstPanel, ML));
    expect(root.querySelectorAll(".hl").length).toBeGreaterThan(0);

    const backdrop = firstPanel.querySelector("rect.backdrop");
    expect(backdrop).not.toBeNull();
    hover(backdrop!);
    expect(root.querySelectorAll(".hl")).toHaveLength(0);
  });

  it("highlights from the concept list reach the treemaps", () => {
    const { root } = mounted;
    const entry = root.querySelector(`.concept-entry[data-concept="${ML}"]`);
    expect(entry).not.toBeNull();
    entry!.dispatchEvent(new MouseEvent("mouseenter"));
    for (const doc of docs) {
      const panel = panelFor(root, doc.id);
      expect(circleNode(panel, ML).classList.contains("hl")).toBe(true);
    }
    entry!.dispatchEvent(new MouseEvent("mouseleave"));
    expect(root.querySelectorAll(".hl")).toHaveLength(0);
  });

  it("hovering a minimap line lights the sentence and its concepts", () => {
    const { root } = mounted;
    const firstPanel = panelFor(root, docs[0]!.id);
    const line = firstPanel.querySelector('.minimap-line[data-sentence="1"]');
    hover(line!);

    const span = firstPanel.querySelector('.rawtext .sentence[data-sentence="1"]');
    expect(span?.classList.contains("hl")).toBe(true);
    // sentence 1 of the first document mentions both learning concepts
    expect(circleNode(firstPanel, ML).classList.contains("hl")).toBe(true);
    expect(
      circleNode(firstPanel, TOPIC("deep_learning")).classList.contains("hl"),
    ).toBe(true);
  });

  it("search lights matching circles across panels and flags empty results", async () => {
    const { root, app } = mounted;
    await app.runSearch("learning");
    for (const doc of docs) {
      const panel = panelFor(root, doc.id);
      expect(circleNode(panel, ML).classList.contains("hl")).toBe(true);
    }
    expect(
      circleNode(panelFor(root, docs[0]!.id), TOPIC("deep_learning"))
        .classList.contains("hl"),
    ).toBe(true);
    expect(root.querySelector(".search-notice")?.textContent).toBe("");

    await app.runSearch("no such concept");
    expect(root.querySelectorAll(".hl")).toHaveLength(0);
    expect(root.querySelector(".search-notice")?.textContent).toBe("no results");

    await app.runSearch("");
    expect(root.querySelector(".search-notice")?.textContent).toBe("");
  });

  it("replaying the same event log reproduces identical highlights", async () => {
    const record = (m: Mounted): string[][] => {
      const firstPanel = panelFor(m.root, docs[0]!.id);
      const snapshots: string[][] = [];
      hover(circleNode(firstPanel, ML));
      snapshots.push(highlightSnapshot(m.root));
      hover(circleNode(firstPanel, TOPIC("deep_learning")));
      snapshots.push(highlightSnapshot(m.root));
      m.app.setHover({ kind: "sentence", docId: docs[1]!.id, index: 2 });
      snapshots.push(highlightSnapshot(m.root));
      m.app.setHover(null);
      snapshots.push(highlightSnapshot(m.root));
      return snapshots;
    };

    const first = record(mounted);
    document.body.innerHTML = "";
    const second = record(await mountApp());
    expect(second).toEqual(first);
    expect(first[3]).toEqual([]);
  });
});
