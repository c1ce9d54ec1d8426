"""HTTP API over a processed workspace.

All responses are JSON and deterministic for a fixed workspace. Tree,
layout, and comparison payloads pass through exactly as their canonical
artifact serialization so that serving from memory and serving from
written files are byte-identical; the remaining endpoints use typed
response models.
"""

from __future__ import annotations

import json
from urllib.parse import unquote

from fastapi import FastAPI
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse, Response
from pydantic import BaseModel

from ..ontology import concept_card
from .workspace import Workspace


class DocumentInfo(BaseModel):
    id: str
    title: str
    n_concepts: int


class DocumentText(BaseModel):
    document_id: str
    title: str
    text: str


class SentenceInfo(BaseModel):
    index: int
    text: str
    span: list[int]


class DocumentSentences(BaseModel):
    document_id: str
    sentences: list[SentenceInfo]


class ConceptOccurrences(BaseModel):
    frequency: int
    sentences: list[int]


class ConceptInfo(BaseModel):
    id: str
    label: str
    synonyms: list[str]
    same_as: list[str]
    parents: list[str]
    siblings: list[str]
    occurrences: dict[str, ConceptOccurrences]


class SearchResult(BaseModel):
    concept_id: str
    label: str
    documents: list[str]


class SearchResponse(BaseModel):
    query: str
    results: list[SearchResult]


def _canonical(payload: dict) -> Response:
    return Response(
        content=json.dumps(payload, ensure_ascii=False, separators=(",", ":")),
        media_type="application/json",
    )


def _not_found(message: str) -> JSONResponse:
    return JSONResponse(status_code=404, content={"error": message})


def create_app(workspace: Workspace) -> FastAPI:
    app = FastAPI(title="conceptscope", docs_url=None, redoc_url=None)
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["GET"],
        allow_headers=["*"],
    )

    def get_record(doc_id: str):
        return workspace.documents.get(doc_id)

    @app.get("/documents", response_model=list[DocumentInfo])
    def list_documents():
        return [
            DocumentInfo(id=r.document_id, title=r.title, n_concepts=r.n_concepts)
            for r in workspace.documents.values()
        ]

    @app.get("/documents/{doc_id}/text", response_model=DocumentText)
    def document_text(doc_id: str):
        record = get_record(doc_id)
        if record is None:
            return _not_found(f"unknown document {doc_id!r}")
        return DocumentText(document_id=record.document_id, title=record.title, text=record.text)

    @app.get("/documents/{doc_id}/sentences", response_model=DocumentSentences)
    def document_sentences(doc_id: str):
        record = get_record(doc_id)
        if record is None:
            return _not_found(f"unknown document {doc_id!r}")
        return DocumentSentences(
            document_id=record.document_id,
            sentences=[SentenceInfo(**s) for s in record.sentences],
        )

    @app.get("/documents/{doc_id}/tree")
    def document_tree(doc_id: str):
        record = get_record(doc_id)
        if record is None:
            return _not_found(f"unknown document {doc_id!r}")
        return _canonical(record.tree)

    @app.get("/documents/{doc_id}/layout")
    def document_layout(doc_id: str):
        record = get_record(doc_id)
        if record is None:
            return _not_found(f"unknown document {doc_id!r}")
        return _canonical(record.layout)

    @app.get("/comparison")
    def comparison():
        if workspace.comparison is None:
            return _not_found("comparison requires at least two documents")
        return _canonical(workspace.comparison)

    @app.get("/concepts/{concept_id:path}", response_model=ConceptInfo)
    def concept(concept_id: str):
        # ids are URIs; accept both raw and percent-encoded forms
        resolved = concept_id
        if resolved not in workspace.store.concepts:
            decoded = unquote(concept_id)
            if decoded in workspace.store.concepts:
                resolved = decoded
            else:
                return _not_found(f"unknown concept {concept_id!r}")
        card = concept_card(workspace.store, resolved)
        occurrences = {
            record.document_id: ConceptOccurrences(**record.detected[resolved])
            for record in workspace.documents.values()
            if resolved in record.detected
        }
        return ConceptInfo(
            id=card.id,
            label=card.label,
            synonyms=list(card.synonyms),
            same_as=list(card.same_as),
            parents=list(card.parents),
            siblings=list(card.siblings),
            occurrences=occurrences,
        )

    @app.get("/search", response_model=SearchResponse)
    def search(q: str):
        needle = q.casefold()
        results = []
        if needle:
            all_ids = sorted(
                set().union(*(r.node_ids for r in workspace.documents.values()))
                if workspace.documents
                else set()
            )
            for cid in all_ids:
                concept_entry = workspace.store.concepts.get(cid)
                if concept_entry is None:
                    continue
                haystacks = (concept_entry.label, *concept_entry.synonyms)
                if not any(needle in h.casefold() for h in haystacks):
                    continue
                docs = [
                    r.document_id
                    for r in workspace.documents.values()
                    if cid in r.node_ids
                ]
                results.append(
                    SearchResult(concept_id=cid, label=concept_entry.label, documents=docs)
                )
        return SearchResponse(query=q, results=results)

    return app
