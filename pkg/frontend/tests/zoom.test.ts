import { beforeEach, describe, expect, it } from "vitest";

import { CLOUD_MIN_RADIUS, LABEL_MIN_RADIUS } from "../src/state";
import type {
  ConceptPayload,
  DocumentInfo,
  LayoutPayload,
} from "../src/types";
import {
  click,
  fixture,
  fixtureFetch,
  flush,
  hover,
  mountApp,
  panelFor,
  TOPIC,
  type Mounted,
} from "./helpers";

const DL = TOPIC("deep_learning");
const ML = TOPIC("machine_learning");

describe("semantic zoom", () => {
  let mounted: Mounted;
  let docs: DocumentInfo[];
  let layout: LayoutPayload;

  beforeEach(async () => {
    document.body.innerHTML = "";
    mounted = await mountApp();
    docs = fixture<DocumentInfo[]>("documents.json");
    layout = fixture<LayoutPayload>("cmp_a.layout.json");
  });

  it("toggles a circle from LABELED to LABELED_WITH_CLOUD across the threshold", () => {
    const { app, root } = mounted;
    const panel = panelFor(root, docs[0]!.id);
    const radius = layout.circles.find((c) => c.id === DL)!.r;
    const items = layout.clouds[DL]!;
    expect(items.length).toBeGreaterThan(0);

    // zoom out until the screen radius sits between the two thresholds
    const labeledZoom = (LABEL_MIN_RADIUS + CLOUD_MIN_RADIUS) / 2 / radius;
    app.setZoom(docs[0]!.id, labeledZoom);
    let node = panel.querySelector(`g.node[data-concept="${DL}"]`)!;
    expect(node.getAttribute("data-level")).toBe("LABELED");
    expect(node.querySelector("text.circle-label")).not.toBeNull();
    expect(node.querySelector("g.cloud")).toBeNull();

    // cross the cloud threshold: the word cloud appears
    const cloudZoom = (CLOUD_MIN_RADIUS * 1.1) / radius;
    app.setZoom(docs[0]!.id, cloudZoom);
    node = panel.querySelector(`g.node[data-concept="${DL}"]`)!;
    expect(node.getAttribute("data-level")).toBe("LABELED_WITH_CLOUD");
    const words = node.querySelectorAll("g.cloud text.cloud-word");
    expect(words).toHaveLength(items.length);
    expect([...words].map((w) => w.textContent)).toEqual(
      items.map((i) => i.word),
    );
  });

  it("drops every label when zoomed far out", () => {
    const { app, root } = mounted;
    app.setZoom(docs[0]!.id, 0.01);
    const panel = panelFor(root, docs[0]!.id);
    for (const node of panel.querySelectorAll("g.node")) {
      expect(node.getAttribute("data-level")).toBe("UNLABELED");
      expect(node.querySelector("text")).toBeNull();
    }
  });

  it("matches the payload label levels at zoom 1", () => {
    const { root } = mounted;
    const panel = panelFor(root, docs[0]!.id);
    for (const circle of layout.circles) {
      const node = panel.querySelector(`g.node[data-concept="${circle.id}"]`);
      expect(node?.getAttribute("data-level")).toBe(circle.label_level);
    }
  });

  it("applies the zoom transform to the scene group", () => {
    const { app, root } = mounted;
    app.setZoom(docs[0]!.id, 2);
    const scene = panelFor(root, docs[0]!.id).querySelector("g.scene");
    expect(scene?.getAttribute("transform")).toBe("translate(0,0) scale(2)");
  });
});

describe("concept card tooltip", () => {
  let mounted: Mounted;
  let docs: DocumentInfo[];

  beforeEach(async () => {
    document.body.innerHTML = "";
    mounted = await mountApp();
    docs = fixture<DocumentInfo[]>("documents.json");
  });

  it("shows the /concepts payload field-for-field on click", async () => {
    const { root } = mounted;
    const panel = panelFor(root, docs[0]!.id);
    click(panel.querySelector(`g.node[data-concept="${ML}"]`)!);
    await flush();

    const card = root.querySelector(".tooltip .concept-card");
    expect(card).not.toBeNull();

    const payload = fixture<ConceptPayload>("concept.machine_learning.json");
    const rebuilt: Record<string, unknown> = {};
    for (const row of card!.querySelectorAll("[data-field]")) {
      const field = row.getAttribute("data-field")!;
      rebuilt[field] = JSON.parse(row.getAttribute("data-json")!);
    }
    expect(rebuilt).toEqual(payload);

    // human-visible essentials: label, definition link, external link
    expect(card!.querySelector(".card-title")?.textContent).toBe(payload.label);
    expect(
      card!.querySelector<HTMLAnchorElement>(".definition-link")?.href,
    ).toBe(payload.id);
    const external = card!.querySelector<HTMLAnchorElement>(".external-link");
    expect(external?.href).toBe(payload.same_as[0]);
    expect(external?.target).toBe("_blank");
  });

  it("navigates the ontology through concepts absent from every document", async () => {
    const { root } = mounted;
    const panel = panelFor(root, docs[0]!.id);
    click(panel.querySelector(`g.node[data-concept="${ML}"]`)!);
    await flush();
    let card = root.querySelector(".tooltip .concept-card")!;
    expect(card.getAttribute("data-concept")).toBe(ML);

    // hop to the parent: detected in no document, still reachable
    const parent = card.querySelector<HTMLAnchorElement>(
      '[data-field="parents"] a.related-link',
    );
    expect(parent?.dataset.concept).toBe(TOPIC("artificial_intelligence"));
    click(parent!);
    await flush();
    card = root.querySelector(".tooltip .concept-card")!;
    expect(card.getAttribute("data-concept")).toBe(
      TOPIC("artificial_intelligence"),
    );

    // and onward to a sibling of the original concept
    click(panel.querySelector(`g.node[data-concept="${ML}"]`)!);
    await flush();
    card = root.querySelector(".tooltip .concept-card")!;
    const sibling = card.querySelector<HTMLAnchorElement>(
      `[data-field="siblings"] a.related-link[data-concept="${TOPIC("computer_vision")}"]`,
    );
    expect(sibling).not.toBeNull();
    click(sibling!);
    await flush();
    card = root.querySelector(".tooltip .concept-card")!;
    expect(card.getAttribute("data-concept")).toBe(TOPIC("computer_vision"));
    expect(card.querySelector(".card-title")?.textContent).toBe(
      "computer vision",
    );
  });

  it("shows an inline error when the concept fetch fails and stays usable", async () => {
    document.body.innerHTML = "";
    const base = fixtureFetch();
    const failing = (url: string): Promise<Response> =>
      url.includes("/concepts/")
        ? Promise.resolve(new Response("boom", { status: 500 }))
        : base(url);
    const { root } = await mountApp(failing);

    const panel = panelFor(root, docs[0]!.id);
    click(panel.querySelector(`g.node[data-concept="${ML}"]`)!);
    await flush();

    const error = root.querySelector(".tooltip .tooltip-error");
    expect(error).not.toBeNull();
    expect(error!.textContent).toContain("could not load concept");

    // the rest of the view still responds
    hover(panel.querySelector(`g.node[data-concept="${ML}"]`)!);
    expect(root.querySelectorAll(".hl").length).toBeGreaterThan(0);
  });

  it("ignores a stale card when a newer click supersedes it", async () => {
    document.body.innerHTML = "";
    const base = fixtureFetch();
    let block: ((r: Response) => void) | null = null;
    const gated = (url: string): Promise<Response> => {
      if (url.includes("machine_learning") && block === null) {
        return new Promise((resolve) => {
          block = resolve;
        });
      }
      return base(url);
    };
    const { root } = await mountApp(gated);

    const slowPanel = panelFor(root, docs[0]!.id);
    click(slowPanel.querySelector(`g.node[data-concept="${ML}"]`)!);
    const fastPanel = panelFor(root, docs[1]!.id);
    click(
      fastPanel.querySelector(`g.node[data-concept="${TOPIC("cryptography")}"]`)!,
    );
    await flush();
    expect(
      root.querySelector(".concept-card")?.getAttribute("data-concept"),
    ).toBe(TOPIC("cryptography"));

    // the first response finally arrives and must be discarded
    const late = await base(
      `http://api.test/concepts/${encodeURIComponent(ML)}`,
    );
    block!(late);
    await flush();
    expect(
      root.querySelector(".concept-card")?.getAttribute("data-concept"),
    ).toBe(TOPIC("cryptography"));
  });
});
