/** Thin asynchronous client for the analysis server.
 *
 * Every method is a single GET returning parsed JSON. Consumers that
 * issue overlapping requests for the same UI slot (search box, tooltip)
 * guard against out-of-order arrival with a {@link RequestGate}.
 */

import type {
  ComparisonPayload,
  ConceptPayload,
  DocumentInfo,
  LayoutPayload,
  SearchPayload,
  SentencesPayload,
  TextPayload,
  TreePayload,
} from "./types.js";

export type FetchLike = (url: string) => Promise<Response>;

export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly url: string,
  ) {
    super(`request failed with status ${status}: ${url}`);
    this.name = "ApiError";
  }
}

export class ApiClient {
  private readonly base: string;
  private readonly fetchImpl: FetchLike;

  constructor(base = "", fetchImpl?: FetchLike) {
    // strip one trailing slash so route concatenation stays predictable
    this.base = base.endsWith("/") ? base.slice(0, -1) : base;
    this.fetchImpl = fetchImpl ?? ((url) => fetch(url));
  }

  private async get<T>(route: string): Promise<T> {
    const url = this.base + route;
    const response = await this.fetchImpl(url);
    if (!response.ok) {
      throw new ApiError(response.status, url);
    }
    return (await response.json()) as T;
  }

  documents(): Promise<DocumentInfo[]> {
    return this.get("/documents");
  }

  text(docId: string): Promise<TextPayload> {
    return this.get(`/documents/${encodeURIComponent(docId)}/text`);
  }

  sentences(docId: string): Promise<SentencesPayload> {
    return this.get(`/documents/${encodeURIComponent(docId)}/sentences`);
  }

  tree(docId: string): Promise<TreePayload> {
    return this.get(`/documents/${encodeURIComponent(docId)}/tree`);
  }

  layout(docId: string): Promise<LayoutPayload> {
    return this.get(`/documents/${encodeURIComponent(docId)}/layout`);
  }

  concept(conceptId: string): Promise<ConceptPayload> {
    // concept ids are full URIs; encode everything including slashes
    return this.get(`/concepts/${encodeURIComponent(conceptId)}`);
  }

  comparison(): Promise<ComparisonPayload> {
    return this.get("/comparison");
  }

  search(query: string): Promise<SearchPayload> {
    return this.get(`/search?q=${encodeURIComponent(query)}`);
  }
}

/** Monotonic ticket counter that identifies the newest in-flight request.
 *
 * The event loop is single threaded but responses resolve in arbitrary
 * order; a slot's stale responses must be dropped, not applied. Callers
 * take a ticket before awaiting and check it when the payload lands.
 */
export class RequestGate {
  private counters = new Map<string, number>();

  /** Register a new request for the slot and return its ticket. */
  issue(slot: string): number {
    const next = (this.counters.get(slot) ?? 0) + 1;
    this.counters.set(slot, next);
    return next;
  }

  /** True while no younger request for the slot has been issued. */
  isCurrent(slot: string, ticket: number): boolean {
    return this.counters.get(slot) === ticket;
  }
}
