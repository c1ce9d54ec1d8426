"""Regenerate the frontend test fixtures from the Python package.

Captures real HTTP responses for the three comparison documents, so UI
tests assert against exactly what the server sends. Run from the
repository root:

    python3 frontend/scripts/make_fixtures.py
"""

from __future__ import annotations

import json
from pathlib import Path
from urllib.parse import quote

from fastapi.testclient import TestClient

from conceptscope.server import build_workspace, create_app

ROOT = Path(__file__).resolve().parents[2]
FIXTURES = ROOT / "tests" / "fixtures"
OUT = ROOT / "frontend" / "tests" / "fixtures"

CONCEPTS = [
    "https://onto.example.org/topics/machine_learning",
    "https://onto.example.org/topics/cryptography",
    # ontology neighbors that occur in no document; the tooltip can
    # still navigate to them
    "https://onto.example.org/topics/artificial_intelligence",
    "https://onto.example.org/topics/computer_vision",
]


def main() -> None:
    workspace = build_workspace(
        [FIXTURES / "cmp_a.txt", FIXTURES / "cmp_b.txt", FIXTURES / "cmp_c.txt"],
        FIXTURES / "ontology.csv",
        cache_path=FIXTURES / "lookup_cache.json",
    )
    client = TestClient(create_app(workspace))
    OUT.mkdir(parents=True, exist_ok=True)

    def save(name: str, route: str) -> None:
        response = client.get(route)
        assert response.status_code == 200, (route, response.status_code)
        (OUT / name).write_bytes(response.content)

    save("documents.json", "/documents")
    save("comparison.json", "/comparison")
    documents = json.loads((OUT / "documents.json").read_text("utf-8"))
    for entry in documents:
        doc_id, title = entry["id"], entry["title"]
        for kind in ("text", "sentences", "tree", "layout"):
            save(f"{title}.{kind}.json", f"/documents/{doc_id}/{kind}")
    for cid in CONCEPTS:
        slug = cid.rsplit("/", 1)[-1]
        save(f"concept.{slug}.json", f"/concepts/{quote(cid, safe='')}")
    save("search.learning.json", "/search?q=learning")
    print(f"wrote fixtures to {OUT}")


if __name__ == "__main__":
    main()
