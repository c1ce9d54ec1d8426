/** Browser entry point.
 *
 * The API origin defaults to the page's own origin; pass ?api=URL to
 * point the UI at a server running elsewhere.
 */

import { ApiClient } from "./api.js";
import { el } from "./dom.js";
import { App } from "./panels.js";

function apiBase(): string {
  const params = new URLSearchParams(window.location.search);
  return params.get("api") ?? "";
}

async function boot(): Promise<void> {
  const host = document.getElementById("app");
  if (host === null) {
    throw new Error("missing #app container");
  }
  const app = new App(host, new ApiClient(apiBase()));
  try {
    await app.init();
  } catch (error) {
    host.textContent = "";
    const failure = el("div", "load-error");
    failure.appendChild(el("h2", undefined, "Could not reach the analysis server"));
    failure.appendChild(
      el("p", undefined, error instanceof Error ? error.message : String(error)),
    );
    host.appendChild(failure);
  }
}

void boot();
