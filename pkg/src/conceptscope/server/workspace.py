"""Workspace orchestration: run the pipeline, persist artifacts, reload.

A workspace is the processed form of one ontology plus one or more
documents: per document the tree JSON and layout JSON, plus raw text and
sentence segmentation for the coordinated views, plus one comparison
summary when at least two documents are loaded. Artifacts are flat JSON
files listed in a manifest; serving from a freshly built workspace and
serving from its written-out files produce byte-identical responses.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field, replace
from importlib import resources
from pathlib import Path

from ..config import CONFIG_KEYS, PipelineConfig
from ..hierarchy import build_concept_tree, compare_trees, comparison_to_dict, tree_to_dict
from ..layout import (
    assign_colors,
    attach_clouds,
    build_word_clouds,
    compute_layout,
    layout_to_dict,
)
from ..matcher import (
    LookupCache,
    LookupClient,
    detect_concepts,
    load_similarity_taxonomy,
)
from ..candidates import train_ngram_model
from ..ontology import OntologyStore, load_ontology
from ..text import analyze_document, load_document

MANIFEST_NAME = "manifest.json"
ONTOLOGY_COPY = "ontology.csv"


@dataclass
class DocumentRecord:
    document_id: str
    title: str
    text: str
    sentences: list[dict]  # [{index, text, span}]
    tree: dict
    layout: dict
    detected: dict[str, dict] = field(default_factory=dict)  # cid -> {frequency, sentences}
    node_ids: set[str] = field(default_factory=set)

    @property
    def n_concepts(self) -> int:
        return len(self.detected)


@dataclass
class Workspace:
    store: OntologyStore
    config: PipelineConfig
    documents: dict[str, DocumentRecord]
    comparison: dict | None
    ontology_path: Path | None = None


def _walk_tree_dict(node: dict, detected: dict[str, dict], node_ids: set[str]) -> None:
    node_ids.add(node["id"])
    if node["detected"]:
        detected[node["id"]] = {
            "frequency": node["frequency"],
            "sentences": list(node["occurrences"]),
        }
    for child in node["children"]:
        _walk_tree_dict(child, detected, node_ids)


def _index_record(record: DocumentRecord) -> DocumentRecord:
    record.detected = {}
    record.node_ids = set()
    _walk_tree_dict(record.tree["root"], record.detected, record.node_ids)
    return record


def bundled_taxonomy_text() -> str:
    return resources.files("conceptscope.data").joinpath("taxonomy.tsv").read_text("utf-8")


def build_workspace(
    doc_paths: list[str | Path],
    ontology_path: str | Path,
    taxonomy_path: str | Path | None = None,
    cache_path: str | Path | None = None,
    config: PipelineConfig | None = None,
) -> Workspace:
    """Run the full pipeline over the given documents."""
    config = config or PipelineConfig()
    store = load_ontology(Path(ontology_path))
    if taxonomy_path is not None:
        tax = load_similarity_taxonomy(Path(taxonomy_path))
    else:
        tax = load_similarity_taxonomy(bundled_taxonomy_text())
    cache = LookupCache.load(cache_path)
    client = None
    if config.service_live:
        client = LookupClient(
            endpoint=config.service_endpoint,
            max_results=config.service_max_results,
            rate_limit_per_sec=config.service_rate_limit_per_sec,
        )

    docs = []
    seen_ids: dict[str, int] = {}
    for path in doc_paths:
        path = Path(path)
        doc = load_document(path.read_bytes(), title=path.stem)
        doc = analyze_document(doc)
        count = seen_ids.get(doc.id, 0) + 1
        seen_ids[doc.id] = count
        if count > 1:  # same bytes loaded twice still need distinct ids
            doc = replace(doc, id=f"{doc.id}-{count}")
        docs.append(doc)

    dictionaries = []
    trees = []
    try:
        for doc in docs:
            model = train_ngram_model(
                doc.sentences,
                min_count=config.ngram_min_count,
                score_threshold=config.ngram_pmi_threshold,
            )
            dictionary = detect_concepts(doc, store, model, cache, tax, config, client=client)
            dictionaries.append(dictionary)
            trees.append(build_concept_tree(dictionary, store))
    finally:
        if client is not None:
            client.close()
            if cache_path is not None and len(cache):
                cache.save(cache_path)  # keep live responses replayable

    colors = assign_colors(trees, config)
    records: dict[str, DocumentRecord] = {}
    for doc, dictionary, tree in zip(docs, dictionaries, trees):
        layout = compute_layout(tree, colors, config)
        clouds = build_word_clouds(tree, doc, dictionary, config)
        layout = attach_clouds(layout, clouds)
        record = DocumentRecord(
            document_id=doc.id,
            title=doc.title,
            text=doc.raw_text,
            sentences=[
                {"index": s.index, "text": s.text, "span": [s.span[0], s.span[1]]}
                for s in doc.sentences
            ],
            tree=tree_to_dict(tree),
            layout=layout_to_dict(layout),
        )
        records[doc.id] = _index_record(record)

    comparison = comparison_to_dict(compare_trees(trees)) if len(trees) >= 2 else None
    return Workspace(
        store=store,
        config=config,
        documents=records,
        comparison=comparison,
        ontology_path=Path(ontology_path),
    )


def _config_to_manifest(config: PipelineConfig) -> dict:
    return {key: getattr(config, name) for key, name in sorted(CONFIG_KEYS.items())}


def _config_from_manifest(data: dict) -> PipelineConfig:
    return replace(
        PipelineConfig(), **{CONFIG_KEYS[key]: value for key, value in data.items()}
    )


def write_workspace(workspace: Workspace, out_dir: str | Path) -> Path:
    """Write all artifacts plus the manifest; returns the manifest path."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    if workspace.ontology_path is None:
        raise ValueError("workspace has no ontology source to copy")
    (out / ONTOLOGY_COPY).write_bytes(Path(workspace.ontology_path).read_bytes())

    entries = []
    for doc_id, record in workspace.documents.items():
        files = {
            "text_file": f"{doc_id}.txt",
            "sentences_file": f"{doc_id}.sentences.json",
            "tree_file": f"{doc_id}.tree.json",
            "layout_file": f"{doc_id}.layout.json",
        }
        (out / files["text_file"]).write_text(record.text, "utf-8")
        (out / files["sentences_file"]).write_text(
            json.dumps(
                {"document_id": doc_id, "sentences": record.sentences},
                ensure_ascii=False,
                separators=(",", ":"),
            ),
            "utf-8",
        )
        (out / files["tree_file"]).write_text(
            json.dumps(record.tree, ensure_ascii=False, separators=(",", ":")), "utf-8"
        )
        (out / files["layout_file"]).write_text(
            json.dumps(record.layout, ensure_ascii=False, separators=(",", ":")), "utf-8"
        )
        entries.append({"id": doc_id, "title": record.title, **files})

    manifest = {
        "root_id": workspace.store.root_id,
        "ontology_file": ONTOLOGY_COPY,
        "config": _config_to_manifest(workspace.config),
        "documents": entries,
        "comparison": workspace.comparison,
    }
    manifest_path = out / MANIFEST_NAME
    manifest_path.write_text(
        json.dumps(manifest, ensure_ascii=False, indent=1) + "\n", "utf-8"
    )
    return manifest_path


def load_workspace(directory: str | Path) -> Workspace:
    """Rebuild a servable workspace from written artifacts."""
    root = Path(directory)
    manifest = json.loads((root / MANIFEST_NAME).read_text("utf-8"))
    store = load_ontology(root / manifest["ontology_file"])
    if store.root_id != manifest["root_id"]:
        raise ValueError(
            f"manifest root {manifest['root_id']!r} does not match ontology root {store.root_id!r}"
        )
    config = _config_from_manifest(manifest.get("config", {}))
    documents: dict[str, DocumentRecord] = {}
    for entry in manifest["documents"]:
        sentences = json.loads((root / entry["sentences_file"]).read_text("utf-8"))
        record = DocumentRecord(
            document_id=entry["id"],
            title=entry["title"],
            text=(root / entry["text_file"]).read_text("utf-8"),
            sentences=sentences["sentences"],
            tree=json.loads((root / entry["tree_file"]).read_text("utf-8")),
            layout=json.loads((root / entry["layout_file"]).read_text("utf-8")),
        )
        documents[entry["id"]] = _index_record(record)
    return Workspace(
        store=store,
        config=config,
        documents=documents,
        comparison=manifest.get("comparison"),
        ontology_path=root / manifest["ontology_file"],
    )
