"""Immutable ontology store loaded from CSV triples.

The triple file carries one quoted record per line: subject, predicate,
object. Predicates are recognized by their fragment (the part after the
final ``#``): superTopicOf (subject is the parent of object), label,
relatedEquivalent and preferentialEquivalent (synonym strings), and
sameAs (external URI). Anything else is ignored with a counted warning.

Super-topic edges may form a DAG; every query that needs a tree uses the
canonical path: shortest path to the root, ties broken by the
lexicographically smallest id sequence.
"""

from __future__ import annotations

import csv
import io
import logging
from collections import deque
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Mapping

from .errors import OntologyError
from .text import normalize_term

log = logging.getLogger(__name__)

_PARENT_FRAGMENT = "superTopicOf"
_LABEL_FRAGMENT = "label"
_SYNONYM_FRAGMENTS = frozenset({"relatedEquivalent", "preferentialEquivalent"})
_SAME_AS_FRAGMENT = "sameAs"


@dataclass(frozen=True)
class TripleRecord:
    subject: str
    predicate: str
    object: str


@dataclass(frozen=True)
class Concept:
    id: str
    label: str
    synonyms: tuple[str, ...]
    parents: tuple[str, ...]
    same_as: tuple[str, ...]


@dataclass(frozen=True)
class OntologyStore:
    concepts: Mapping[str, Concept]
    root_id: str
    label_index: Mapping[str, str]  # normalized label/synonym -> concept id
    same_as_index: Mapping[str, tuple[str, ...]]  # external URI -> concept ids
    canonical_parent: Mapping[str, str | None]
    depth: Mapping[str, int]  # root has depth 0


def parse_triples(source: str | Path | Iterable[str]) -> list[TripleRecord]:
    """Read CSV triple records; raises OntologyError on malformed rows."""
    if isinstance(source, Path):
        lines: Iterable[str] = source.read_text("utf-8").splitlines()
    elif isinstance(source, str):
        lines = io.StringIO(source)
    else:
        lines = source
    records = []
    for row_num, row in enumerate(csv.reader(lines), start=1):
        if not row:
            continue
        if len(row) != 3:
            raise OntologyError(f"triple row {row_num}: expected 3 fields, got {len(row)}")
        subject, predicate, obj = (field.strip() for field in row)
        if not subject or not predicate or not obj:
            raise OntologyError(f"triple row {row_num}: empty field")
        records.append(TripleRecord(subject, predicate, obj))
    return records


def _fragment(uri: str) -> str:
    return uri.rsplit("#", 1)[-1]


def _slug_label(concept_id: str) -> str:
    slug = concept_id.rstrip("/").rsplit("/", 1)[-1].rsplit("#", 1)[-1]
    return slug.replace("_", " ").replace("-", " ")


def load_ontology(source: str | Path | Iterable[TripleRecord]) -> OntologyStore:
    """Build the store; rejects cycles, missing roots, and multiple roots."""
    if isinstance(source, (str, Path)):
        records = parse_triples(source)
    else:
        records = list(source)

    ids: set[str] = set()
    labels: dict[str, set[str]] = {}
    synonyms: dict[str, set[str]] = {}
    parents: dict[str, set[str]] = {}
    same_as: dict[str, set[str]] = {}
    unrecognized = 0
    for rec in records:
        fragment = _fragment(rec.predicate)
        if fragment == _PARENT_FRAGMENT:
            ids.add(rec.subject)
            ids.add(rec.object)
            parents.setdefault(rec.object, set()).add(rec.subject)
        elif fragment == _LABEL_FRAGMENT:
            ids.add(rec.subject)
            labels.setdefault(rec.subject, set()).add(rec.object)
        elif fragment in _SYNONYM_FRAGMENTS:
            ids.add(rec.subject)
            synonyms.setdefault(rec.subject, set()).add(rec.object)
        elif fragment == _SAME_AS_FRAGMENT:
            ids.add(rec.subject)
            same_as.setdefault(rec.subject, set()).add(rec.object)
        else:
            unrecognized += 1
    if unrecognized:
        log.warning("ignored %d triple(s) with unrecognized predicates", unrecognized)

    roots = sorted(cid for cid in ids if not parents.get(cid))
    if not roots:
        raise OntologyError("no root concept: every concept has a parent (or input is empty)")
    if len(roots) > 1:
        raise OntologyError(f"multiple root concepts: {', '.join(roots)}")
    root_id = roots[0]

    depth, canonical_parent = _canonical_paths(ids, parents, root_id)

    concepts: dict[str, Concept] = {}
    for cid in sorted(ids):
        label_set = labels.get(cid)
        if label_set:
            label = min(label_set)
            if len(label_set) > 1:
                log.warning("concept %s has %d labels; keeping %r", cid, len(label_set), label)
        else:
            label = _slug_label(cid)
        concepts[cid] = Concept(
            id=cid,
            label=label,
            synonyms=tuple(sorted(synonyms.get(cid, ()))),
            parents=tuple(sorted(parents.get(cid, ()))),
            same_as=tuple(sorted(same_as.get(cid, ()))),
        )

    label_index = _build_label_index(concepts)
    sa_index: dict[str, set[str]] = {}
    for cid, concept in concepts.items():
        for uri in concept.same_as:
            sa_index.setdefault(uri, set()).add(cid)

    return OntologyStore(
        concepts=concepts,
        root_id=root_id,
        label_index=label_index,
        same_as_index={uri: tuple(sorted(cids)) for uri, cids in sa_index.items()},
        canonical_parent=canonical_parent,
        depth=depth,
    )


def _canonical_paths(
    ids: set[str], parents: dict[str, set[str]], root_id: str
) -> tuple[dict[str, int], dict[str, str | None]]:
    """BFS down from the root; unreachable ids signal a parent cycle."""
    children: dict[str, set[str]] = {}
    for child, parent_set in parents.items():
        for parent in parent_set:
            children.setdefault(parent, set()).add(child)
    depth: dict[str, int] = {root_id: 0}
    queue = deque([root_id])
    while queue:
        current = queue.popleft()
        for child in sorted(children.get(current, ())):
            if child not in depth:
                depth[child] = depth[current] + 1
                queue.append(child)
    unreachable = sorted(ids - depth.keys())
    if unreachable:
        witness = _cycle_witness(unreachable, parents)
        raise OntologyError(
            f"{len(unreachable)} concept(s) cannot reach the root"
            + (f"; cycle: {' -> '.join(witness)}" if witness else f": {', '.join(unreachable[:5])}")
        )
    canonical_parent: dict[str, str | None] = {root_id: None}
    for cid in ids:
        if cid == root_id:
            continue
        # min depth then min id gives the lexicographically smallest
        # shortest id sequence, because the choice at each hop is greedy
        best = min(parents[cid], key=lambda p: (depth[p], p))
        canonical_parent[cid] = best
    return depth, canonical_parent


def _cycle_witness(unreachable: list[str], parents: dict[str, set[str]]) -> list[str]:
    seen: dict[str, int] = {}
    trail: list[str] = []
    node = unreachable[0]
    while node is not None and node not in seen:
        seen[node] = len(trail)
        trail.append(node)
        parent_set = parents.get(node)
        node = min(parent_set) if parent_set else None
    if node is None:
        return []
    return trail[seen[node] :] + [node]


def _build_label_index(concepts: dict[str, Concept]) -> dict[str, str]:
    # (not primary, concept id): primary labels beat synonyms, then the
    # smaller id wins; collisions are counted and logged
    best: dict[str, tuple[bool, str]] = {}
    collisions = 0
    for cid, concept in concepts.items():
        entries = [(concept.label, True)] + [(s, False) for s in concept.synonyms]
        for surface, is_primary in entries:
            key = normalize_term(surface)
            if not key:
                continue
            rank = (not is_primary, cid)
            if key in best and best[key][1] != cid:
                collisions += 1
            if key not in best or rank < best[key]:
                best[key] = rank
    if collisions:
        log.info("label index: %d normalized-label collision(s) resolved", collisions)
    return {key: rank[1] for key, rank in sorted(best.items())}


def lookup_exact(store: OntologyStore, surface: str) -> str | None:
    """Concept id whose normalized label or synonym equals the surface."""
    return store.label_index.get(normalize_term(surface))


def path_to_root(store: OntologyStore, concept_id: str) -> list[str]:
    """Canonical path [concept_id, ..., root_id]."""
    if concept_id not in store.concepts:
        raise KeyError(f"unknown concept id {concept_id!r}")
    path = [concept_id]
    while path[-1] != store.root_id:
        path.append(store.canonical_parent[path[-1]])
    return path


def top_level_ancestor(store: OntologyStore, concept_id: str) -> str:
    """The child of the root on the canonical path; the root maps to itself."""
    path = path_to_root(store, concept_id)
    return path[0] if len(path) == 1 else path[-2]


@dataclass(frozen=True)
class ConceptCard:
    id: str
    label: str
    synonyms: tuple[str, ...]
    same_as: tuple[str, ...]
    parents: tuple[str, ...]
    siblings: tuple[str, ...]


def concept_card(store: OntologyStore, concept_id: str) -> ConceptCard:
    """Tooltip payload: label, synonyms, external links, parents, and the
    other children of the canonical parent."""
    concept = store.concepts.get(concept_id)
    if concept is None:
        raise KeyError(f"unknown concept id {concept_id!r}")
    parent = store.canonical_parent[concept_id]
    siblings: tuple[str, ...] = ()
    if parent is not None:
        siblings = tuple(
            sorted(
                cid
                for cid, p in store.canonical_parent.items()
                if p == parent and cid != concept_id
            )
        )
    return ConceptCard(
        id=concept_id,
        label=concept.label,
        synonyms=concept.synonyms,
        same_as=concept.same_as,
        parents=concept.parents,
        siblings=siblings,
    )
