"""Concept detection: accurate matching, then fuzzy matching through an
external entity-lookup service filtered by Wu-Palmer similarity.

For every candidate term the matcher first tries an identical match
against the ontology's label index. Failing that (and only when fuzzy
matching is enabled) it asks the lookup service for external entities,
keeps those whose URI links back to an ontology concept via sameAs, and
accepts the best one whose Wu-Palmer similarity to the candidate clears
the threshold. All test and CI traffic is served from a recorded cache;
talking to the live service is opt-in and rate limited.
"""

from __future__ import annotations

import json
import logging
import threading
import time
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Iterable, Mapping

import httpx

from .candidates import CandidateTerm, NGramModel, extract_candidates
from .config import PipelineConfig
from .errors import LookupUnavailableError, TaxonomyError
from .ontology import OntologyStore, lookup_exact
from .text import STOPWORDS, Document, normalize_term

log = logging.getLogger(__name__)

ACCURATE = "ACCURATE"
FUZZY = "FUZZY"


@dataclass(frozen=True)
class ConceptMatch:
    concept_id: str
    candidate_text: str
    kind: str  # ACCURATE or FUZZY
    similarity: float  # 1.0 for ACCURATE; >= threshold for FUZZY
    sentence_index: int
    span: tuple[int, int]


@dataclass(frozen=True)
class ConceptDictionary:
    document_id: str
    matches: tuple[ConceptMatch, ...]
    frequency: Mapping[str, int]
    occurrences: Mapping[str, tuple[int, ...]]


@dataclass(frozen=True)
class FuzzyCandidate:
    external_uri: str
    surface: str
    service_score: float


# ---------------------------------------------------------------- taxonomy


@dataclass(frozen=True)
class SimilarityTaxonomy:
    parent: Mapping[str, str | None]
    depth: Mapping[str, int]  # root has depth 1
    root: str


def load_similarity_taxonomy(source: str | Path | Iterable[str]) -> SimilarityTaxonomy:
    """Parse child TAB parent edges; blank lines and # comments skipped."""
    if isinstance(source, Path):
        lines: Iterable[str] = source.read_text("utf-8").splitlines()
    elif isinstance(source, str):
        lines = source.splitlines()
    else:
        lines = source
    parent: dict[str, str | None] = {}
    terms: set[str] = set()
    for line_num, line in enumerate(lines, start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        parts = stripped.split("\t")
        if len(parts) != 2 or not parts[0].strip() or not parts[1].strip():
            raise TaxonomyError(f"line {line_num}: expected 'child<TAB>parent'")
        child, par = parts[0].strip().casefold(), parts[1].strip().casefold()
        if child in parent and parent[child] != par:
            raise TaxonomyError(f"line {line_num}: {child!r} already has parent {parent[child]!r}")
        parent[child] = par
        terms.add(child)
        terms.add(par)
    if not terms:
        raise TaxonomyError("taxonomy is empty")
    roots = sorted(t for t in terms if t not in parent)
    if not roots:
        raise TaxonomyError("taxonomy has no root (cycle covers every term)")
    if len(roots) > 1:
        raise TaxonomyError(f"taxonomy has multiple roots: {', '.join(roots)}")
    root = roots[0]
    parent[root] = None
    depth: dict[str, int] = {}
    for term in terms:
        chain = []
        node: str | None = term
        while node is not None and node not in depth:
            if node in chain:
                cycle = chain[chain.index(node) :] + [node]
                raise TaxonomyError(f"taxonomy cycle: {' -> '.join(cycle)}")
            chain.append(node)
            node = parent[node]
        base = depth[node] if node is not None else 0
        for i, item in enumerate(reversed(chain), start=1):
            depth[item] = base + i
    return SimilarityTaxonomy(parent=parent, depth=depth, root=root)


def wu_palmer(tax: SimilarityTaxonomy, a: str, b: str) -> Fraction | None:
    """2*depth(lcs) / (depth(a)+depth(b)); None when a term is absent.

    Depths are small integers, so the score is returned as an exact
    rational rather than a lossy float.
    """
    a, b = a.casefold(), b.casefold()
    if a not in tax.depth or b not in tax.depth:
        return None
    ancestors = {}
    node: str | None = a
    while node is not None:
        ancestors[node] = tax.depth[node]
        node = tax.parent[node]
    node = b
    while node is not None:
        if node in ancestors:
            return Fraction(2 * tax.depth[node], tax.depth[a] + tax.depth[b])
        node = tax.parent[node]
    return None  # disjoint forests cannot happen with a single root


# ---------------------------------------------------------------- cache


class LookupCache:
    """Recorded service responses keyed by query string.

    A recorded empty list is a hit; only a missing key is a miss. The
    file format is a JSON object query -> [{uri, label, score}], written
    with sorted keys so diffs stay readable.
    """

    def __init__(self, entries: dict[str, list[FuzzyCandidate]] | None = None):
        self._entries: dict[str, list[FuzzyCandidate]] = dict(entries or {})
        self._lock = threading.Lock()

    @classmethod
    def load(cls, path: str | Path | None) -> "LookupCache":
        if path is None or not Path(path).exists():
            return cls()
        raw = json.loads(Path(path).read_text("utf-8"))
        entries = {
            query: [
                FuzzyCandidate(
                    external_uri=item["uri"],
                    surface=item.get("label", ""),
                    service_score=float(item.get("score", 0.0)),
                )
                for item in response
            ]
            for query, response in raw.items()
        }
        return cls(entries)

    def get(self, query: str) -> list[FuzzyCandidate] | None:
        with self._lock:
            hit = self._entries.get(query)
            return list(hit) if hit is not None else None

    def record(self, query: str, response: list[FuzzyCandidate]) -> None:
        with self._lock:
            self._entries[query] = list(response)

    def save(self, path: str | Path) -> None:
        with self._lock:
            payload = {
                query: [
                    {"uri": c.external_uri, "label": c.surface, "score": c.service_score}
                    for c in response
                ]
                for query, response in self._entries.items()
            }
        Path(path).write_text(
            json.dumps(payload, ensure_ascii=False, indent=1, sort_keys=True) + "\n", "utf-8"
        )

    def __len__(self) -> int:
        return len(self._entries)


# ---------------------------------------------------------------- client


class LookupClient:
    """Thin HTTP client for the entity-lookup service.

    GET {endpoint}?query=...&maxResults=N, response: JSON list of
    {uri, label, score}. Requests are globally rate limited.
    """

    def __init__(
        self,
        endpoint: str,
        max_results: int = 5,
        rate_limit_per_sec: float = 1.0,
        transport: httpx.BaseTransport | None = None,
    ):
        self.endpoint = endpoint
        self.max_results = max_results
        self._min_interval = 1.0 / rate_limit_per_sec if rate_limit_per_sec > 0 else 0.0
        self._last_request = 0.0
        self._lock = threading.Lock()
        self._client = httpx.Client(transport=transport, timeout=10.0)

    def _throttle(self) -> None:
        if self._min_interval <= 0:
            return
        wait = self._last_request + self._min_interval - time.monotonic()
        if wait > 0:
            time.sleep(wait)
        self._last_request = time.monotonic()

    def lookup(self, query: str) -> list[FuzzyCandidate]:
        with self._lock:
            self._throttle()
            try:
                response = self._client.get(
                    self.endpoint,
                    params={"query": query, "maxResults": str(self.max_results)},
                )
                response.raise_for_status()
                payload = response.json()
            except (httpx.HTTPError, ValueError) as exc:
                raise LookupUnavailableError(f"lookup failed for {query!r}: {exc}") from exc
        if not isinstance(payload, list):
            raise LookupUnavailableError(f"lookup returned non-list payload for {query!r}")
        results = []
        for item in payload[: self.max_results]:
            uri = item.get("uri")
            if not uri:
                continue
            results.append(
                FuzzyCandidate(
                    external_uri=uri,
                    surface=item.get("label", ""),
                    service_score=float(item.get("score", 0.0)),
                )
            )
        return results

    def close(self) -> None:
        self._client.close()


# ---------------------------------------------------------------- matching


def _head_term(phrase: str) -> str:
    """Last non-stopword word of the normalized phrase (hyphens split)."""
    words = normalize_term(phrase).split()
    for word in reversed(words):
        if word not in STOPWORDS:
            return word
    return words[-1] if words else ""


def _service_candidates(
    query: str,
    cache: LookupCache,
    client: LookupClient | None,
) -> list[FuzzyCandidate]:
    hit = cache.get(query)
    if hit is not None:
        return hit
    if client is None:
        raise LookupUnavailableError(
            f"no live client and query not in cache: {query!r}"
        )
    response = client.lookup(query)
    cache.record(query, response)  # write-through so reruns replay offline
    return response


def fuzzy_resolve(
    candidate: CandidateTerm,
    store: OntologyStore,
    cache: LookupCache,
    tax: SimilarityTaxonomy,
    config: PipelineConfig,
    client: LookupClient | None = None,
) -> ConceptMatch | None:
    """Resolve one non-exact candidate through the lookup service.

    External URIs are linked back to ontology concepts via their sameAs
    sets; the best link whose Wu-Palmer similarity (head word of the
    candidate vs. head word of the concept label) clears the threshold
    becomes a FUZZY match.
    """
    externals = _service_candidates(candidate.text, cache, client)
    scored: list[tuple[float, str]] = []
    seen: set[str] = set()
    for external in externals:
        for concept_id in store.same_as_index.get(external.external_uri, ()):
            if concept_id in seen:
                continue
            seen.add(concept_id)
            similarity = wu_palmer(
                tax, _head_term(candidate.text), _head_term(store.concepts[concept_id].label)
            )
            if similarity is None or similarity < config.matcher_threshold:
                continue
            scored.append((similarity, concept_id))
    if not scored:
        return None
    scored.sort(key=lambda pair: (-pair[0], pair[1]))
    if len(scored) > 1:
        log.debug(
            "candidate %r: picked %s over %d alternative(s)",
            candidate.text,
            scored[0][1],
            len(scored) - 1,
        )
    similarity, concept_id = scored[0]
    return ConceptMatch(
        concept_id=concept_id,
        candidate_text=candidate.text,
        kind=FUZZY,
        similarity=float(similarity),
        sentence_index=candidate.sentence_index,
        span=candidate.span,
    )


def detect_concepts(
    doc: Document,
    store: OntologyStore,
    model: NGramModel,
    cache: LookupCache,
    tax: SimilarityTaxonomy,
    config: PipelineConfig,
    client: LookupClient | None = None,
) -> ConceptDictionary:
    """Match every candidate of every sentence against the ontology.

    Accurate matches win; fuzzy resolution runs only for candidates with
    no exact match and only when config.fuzzy_enabled. A concept matched
    through a synonym and through its primary label is still one concept.
    """
    matches: list[ConceptMatch] = []
    for sent in doc.sentences:
        for candidate in extract_candidates(sent, model):
            concept_id = lookup_exact(store, candidate.text)
            if concept_id is not None:
                matches.append(
                    ConceptMatch(
                        concept_id=concept_id,
                        candidate_text=candidate.text,
                        kind=ACCURATE,
                        similarity=1.0,
                        sentence_index=sent.index,
                        span=candidate.span,
                    )
                )
                continue
            if not config.fuzzy_enabled:
                continue
            fuzzy = fuzzy_resolve(candidate, store, cache, tax, config, client=client)
            if fuzzy is not None:
                matches.append(fuzzy)
    matches.sort(key=lambda m: (m.sentence_index, m.span[0], m.span[1], m.concept_id))
    frequency: dict[str, int] = {}
    occurrences: dict[str, set[int]] = {}
    for match in matches:
        frequency[match.concept_id] = frequency.get(match.concept_id, 0) + 1
        occurrences.setdefault(match.concept_id, set()).add(match.sentence_index)
    return ConceptDictionary(
        document_id=doc.id,
        matches=tuple(matches),
        frequency={cid: frequency[cid] for cid in sorted(frequency)},
        occurrences={cid: tuple(sorted(occurrences[cid])) for cid in sorted(occurrences)},
    )


def dictionary_to_dict(dictionary: ConceptDictionary) -> dict:
    """JSON-ready form with stable ordering."""
    return {
        "document_id": dictionary.document_id,
        "matches": [
            {
                "concept_id": m.concept_id,
                "candidate_text": m.candidate_text,
                "kind": m.kind,
                "similarity": m.similarity,
                "sentence_index": m.sentence_index,
                "span": list(m.span),
            }
            for m in dictionary.matches
        ],
        "frequency": dict(dictionary.frequency),
        "occurrences": {cid: list(idx) for cid, idx in dictionary.occurrences.items()},
    }
