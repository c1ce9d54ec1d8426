/** Shared test scaffolding: fixture loading and a fetch stub that
 * serves the recorded server responses.
 *
 * The fixtures are captured verbatim from the HTTP API over the
 * three-document comparison workspace, so every assertion runs against
 * real payloads.
 */

import { readFileSync } from "node:fs";
import { resolve } from "node:path";

import { ApiClient, type FetchLike } from "../src/api";
import { App } from "../src/panels";
import type { DocumentInfo } from "../src/types";

export const TOPIC = (slug: string): string =>
  `https://onto.example.org/topics/${slug}`;

export function fixtureText(name: string): string {
  // test runs start in the package root, next to vitest.config.ts
  return readFileSync(resolve(process.cwd(), "tests/fixtures", name), "utf-8");
}

export function fixture<T>(name: string): T {
  return JSON.parse(fixtureText(name)) as T;
}

const CONCEPT_FIXTURES = new Set([
  "machine_learning",
  "cryptography",
  "artificial_intelligence",
  "computer_vision",
]);

function json(status: number, body: unknown): Response {
  return new Response(JSON.stringify(body), {
    status,
    headers: { "content-type": "application/json" },
  });
}

/** Route requests to fixture files the way the live server would. */
export function fixtureFetch(log?: string[]): FetchLike {
  const documents = fixture<DocumentInfo[]>("documents.json");
  const titles = new Map(documents.map((d) => [d.id, d.title]));
  return (url: string) => {
    log?.push(url);
    const parsed = new URL(url);
    const path = decodeURIComponent(parsed.pathname);
    if (path === "/documents") {
      return Promise.resolve(json(200, documents));
    }
    if (path === "/comparison") {
      return Promise.resolve(json(200, fixture("comparison.json")));
    }
    if (path === "/search") {
      const q = parsed.searchParams.get("q") ?? "";
      if (q === "learning") {
        return Promise.resolve(json(200, fixture("search.learning.json")));
      }
      return Promise.resolve(json(200, { query: q, results: [] }));
    }
    const docRoute = path.match(/^\/documents\/([^/]+)\/(text|sentences|tree|layout)$/);
    if (docRoute !== null) {
      const title = titles.get(docRoute[1] ?? "");
      if (title === undefined) {
        return Promise.resolve(json(404, { error: "unknown document" }));
      }
      return Promise.resolve(json(200, fixture(`${title}.${docRoute[2]}.json`)));
    }
    const conceptRoute = path.match(/^\/concepts\/(.+)$/);
    if (conceptRoute !== null) {
      const slug = (conceptRoute[1] ?? "").split("/").pop() ?? "";
      if (CONCEPT_FIXTURES.has(slug)) {
        return Promise.resolve(json(200, fixture(`concept.${slug}.json`)));
      }
      return Promise.resolve(json(404, { error: "unknown concept" }));
    }
    return Promise.resolve(json(404, { error: `unrouted: ${path}` }));
  };
}

export interface Mounted {
  app: App;
  root: HTMLElement;
  requests: string[];
}

/** Mount a fresh App against the fixture workspace and wait for init. */
export async function mountApp(fetchImpl?: FetchLike): Promise<Mounted> {
  const requests: string[] = [];
  const root = document.createElement("div");
  document.body.appendChild(root);
  const api = new ApiClient("http://api.test", fetchImpl ?? fixtureFetch(requests));
  const app = new App(root, api);
  await app.init();
  return { app, root, requests };
}

export function panelFor(root: HTMLElement, docId: string): HTMLElement {
  const panel = root.querySelector(`.panel[data-doc="${docId}"]`);
  if (panel === null) {
    throw new Error(`no panel for ${docId}`);
  }
  return panel as HTMLElement;
}

export function hover(target: Element): void {
  target.dispatchEvent(new MouseEvent("mouseover", { bubbles: true }));
}

export function click(target: Element): void {
  target.dispatchEvent(new MouseEvent("click", { bubbles: true }));
}

/** Drain pending microtasks and timers queued by async handlers. */
export function flush(): Promise<void> {
  return new Promise((resolve) => setTimeout(resolve, 0));
}

/** Stable textual snapshot of everything currently highlighted. */
export function highlightSnapshot(root: HTMLElement): string[] {
  const entries: string[] = [];
  for (const node of root.querySelectorAll(".hl")) {
    const concept = node.getAttribute("data-concept");
    const sentence = node.getAttribute("data-sentence");
    const doc = (node.closest("[data-doc]") as HTMLElement | null)?.dataset.doc ?? "list";
    if (concept !== null) {
      entries.push(`${doc}|${node.tagName.toLowerCase()}|concept:${concept}`);
    } else if (sentence !== null) {
      entries.push(`${doc}|${node.tagName.toLowerCase()}|sentence:${sentence}`);
    }
  }
  entries.sort();
  return entries;
}
