"""Concept tree assembly from detected concepts and ontology paths.

The tree is the union of the canonical root paths of all detected
concepts. Undetected ancestors appear as structural nodes. A detected
concept that also has detected descendants keeps its interior position
but hands its frequency to a synthetic self-leaf child (flagged
``self``), so that circles only ever sit at the deepest level while the
concept still contributes a contour.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Mapping

from .errors import IntegrityError
from .matcher import ConceptDictionary
from .ontology import OntologyStore, path_to_root


@dataclass
class ConceptNode:
    concept_id: str
    label: str
    detected: bool
    is_self: bool
    frequency: int
    occurrences: tuple[int, ...]
    depth: int
    children: list["ConceptNode"] = field(default_factory=list)


@dataclass(frozen=True)
class ConceptTree:
    document_id: str
    root: ConceptNode
    index: Mapping[str, ConceptNode]  # concept id -> positional node


def build_concept_tree(dictionary: ConceptDictionary, store: OntologyStore) -> ConceptTree:
    """Merge canonical root paths of every detected concept into a tree."""
    missing = sorted(cid for cid in dictionary.frequency if cid not in store.concepts)
    if missing:
        raise IntegrityError(f"detected concept(s) not in ontology: {', '.join(missing)}")

    included: set[str] = {store.root_id}
    for cid in dictionary.frequency:
        included.update(path_to_root(store, cid))

    nodes: dict[str, ConceptNode] = {}
    for cid in included:
        nodes[cid] = ConceptNode(
            concept_id=cid,
            label=store.concepts[cid].label,
            detected=False,
            is_self=False,
            frequency=0,
            occurrences=(),
            depth=0,
            children=[],
        )
    for cid in included:
        if cid == store.root_id:
            continue
        parent = store.canonical_parent[cid]
        nodes[parent].children.append(nodes[cid])

    for cid, freq in dictionary.frequency.items():
        node = nodes[cid]
        occurrences = tuple(dictionary.occurrences.get(cid, ()))
        if node.children or cid == store.root_id:
            # detected interior concept: its circle moves to a self-leaf
            node.children.append(
                ConceptNode(
                    concept_id=cid,
                    label=node.label,
                    detected=True,
                    is_self=True,
                    frequency=freq,
                    occurrences=occurrences,
                    depth=0,
                    children=[],
                )
            )
        else:
            node.detected = True
            node.frequency = freq
            node.occurrences = occurrences

    root = nodes[store.root_id]
    _finalize(root, 0)
    return ConceptTree(document_id=dictionary.document_id, root=root, index=nodes)


def _finalize(node: ConceptNode, depth: int) -> None:
    node.depth = depth
    node.children.sort(key=lambda c: (c.concept_id, c.is_self))
    for child in node.children:
        _finalize(child, depth + 1)


def _node_to_dict(node: ConceptNode) -> dict:
    return {
        "id": node.concept_id,
        "label": node.label,
        "detected": node.detected,
        "self": node.is_self,
        "frequency": node.frequency,
        "occurrences": list(node.occurrences),
        "children": [_node_to_dict(child) for child in node.children],
    }


def tree_to_dict(tree: ConceptTree) -> dict:
    return {"document_id": tree.document_id, "root": _node_to_dict(tree.root)}


def serialize_tree(tree: ConceptTree) -> str:
    """Canonical JSON text; byte-stable for identical trees."""
    return json.dumps(tree_to_dict(tree), ensure_ascii=False, separators=(",", ":"))


def iter_nodes(node: ConceptNode):
    """Depth-first preorder walk."""
    yield node
    for child in node.children:
        yield from iter_nodes(child)


def detected_frequencies(tree: ConceptTree) -> dict[str, int]:
    """Concept id -> frequency over detected nodes (self-leaves included)."""
    freq: dict[str, int] = {}
    for node in iter_nodes(tree.root):
        if node.detected:
            freq[node.concept_id] = freq.get(node.concept_id, 0) + node.frequency
    return freq


@dataclass(frozen=True)
class ComparisonSummary:
    document_ids: tuple[str, ...]
    vectors: Mapping[str, tuple[int, ...]]  # concept id -> per-document frequency
    shared: tuple[str, ...]  # detected in >= 2 documents
    unique: Mapping[str, tuple[str, ...]]  # document id -> ids detected only there


def compare_trees(trees: list[ConceptTree]) -> ComparisonSummary:
    """Align detected-concept frequencies across documents."""
    if not trees:
        raise ValueError("compare_trees requires at least one tree")
    doc_ids = [t.document_id for t in trees]
    if len(set(doc_ids)) != len(doc_ids):
        raise ValueError(f"duplicate document ids: {doc_ids}")
    roots = {t.root.concept_id for t in trees}
    if len(roots) != 1:
        raise IntegrityError(f"trees built against different ontology roots: {sorted(roots)}")

    per_doc = [detected_frequencies(t) for t in trees]
    all_ids = sorted(set().union(*per_doc)) if per_doc else []
    vectors = {cid: tuple(freq.get(cid, 0) for freq in per_doc) for cid in all_ids}
    shared = tuple(cid for cid in all_ids if sum(1 for v in vectors[cid] if v) >= 2)
    unique = {
        doc_id: tuple(
            cid
            for cid in all_ids
            if vectors[cid][i] and sum(1 for v in vectors[cid] if v) == 1
        )
        for i, doc_id in enumerate(doc_ids)
    }
    return ComparisonSummary(
        document_ids=tuple(doc_ids), vectors=vectors, shared=shared, unique=unique
    )


def comparison_to_dict(summary: ComparisonSummary) -> dict:
    return {
        "document_ids": list(summary.document_ids),
        "vectors": {cid: list(vec) for cid, vec in summary.vectors.items()},
        "shared": list(summary.shared),
        "unique": {doc_id: list(ids) for doc_id, ids in summary.unique.items()},
    }
