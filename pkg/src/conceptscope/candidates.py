"""Candidate term extraction: noun chunks plus collocation n-grams.

Two candidate sources feed the matcher. Noun chunks follow the grammar
(ADJ|NOUN|PROPN)* (NOUN|PROPN), taken maximally and trimmed of leading
and trailing stop words. Collocations are bigrams/trigrams that occur at
least min_count times in the document and score at or above a pointwise
mutual information threshold; windows containing punctuation or a stop
word are never counted.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Mapping

from .text import Sentence

NOUN_CHUNK = "NOUN_CHUNK"
NGRAM = "NGRAM"

_CHUNK_TAGS = frozenset({"ADJ", "NOUN", "PROPN"})
_HEAD_TAGS = frozenset({"NOUN", "PROPN"})


@dataclass(frozen=True)
class CandidateTerm:
    text: str  # verbatim slice of the document
    source: str  # NOUN_CHUNK or NGRAM
    sentence_index: int
    span: tuple[int, int]


@dataclass(frozen=True)
class NGramModel:
    """Collocations that passed both the count and the score gate."""

    ngrams: Mapping[tuple[str, ...], int]
    min_count: int
    score_threshold: float


def _pmi(gram: tuple[str, ...], count: int, unigrams: Counter, bigrams: Counter, total: int) -> float:
    if len(gram) == 2:
        denom = unigrams[gram[0]] * unigrams[gram[1]]
        return math.log2(total * count / denom)
    # trigram: weakest split point decides, so both halves must cohere
    left = math.log2(total * count / (unigrams[gram[0]] * bigrams[gram[1:]]))
    right = math.log2(total * count / (bigrams[gram[:2]] * unigrams[gram[2]]))
    return min(left, right)


def train_ngram_model(
    sentences: Iterable[Sentence],
    min_count: int = 2,
    score_threshold: float = 3.0,
) -> NGramModel:
    """Count candidate collocations over analyzed sentences.

    Unigram counts run over every non-punctuation token; n-gram windows
    are only counted when no member token is punctuation or a stop word.
    """
    unigrams: Counter = Counter()
    windows: dict[int, Counter] = {2: Counter(), 3: Counter()}
    for sent in sentences:
        toks = [(t.surface.casefold(), t.tag == "PUNCT", t.is_stopword) for t in sent.tokens]
        unigrams.update(word for word, punct, _ in toks if not punct)
        for size in (2, 3):
            for i in range(len(toks) - size + 1):
                window = toks[i : i + size]
                if any(punct or stop for _, punct, stop in window):
                    continue
                windows[size][tuple(word for word, _, _ in window)] += 1
    total = sum(unigrams.values())
    kept: dict[tuple[str, ...], int] = {}
    for size in (2, 3):
        for gram, count in windows[size].items():
            if count < min_count:
                continue
            if _pmi(gram, count, unigrams, windows[2], total) >= score_threshold:
                kept[gram] = count
    return NGramModel(ngrams=kept, min_count=min_count, score_threshold=score_threshold)


def _noun_chunks(sent: Sentence) -> list[tuple[int, int]]:
    """Token index ranges [i, j) of stop-trimmed maximal noun chunks."""
    ranges = []
    tokens = sent.tokens
    i = 0
    while i < len(tokens):
        if tokens[i].tag not in _CHUNK_TAGS:
            i += 1
            continue
        j = i
        while j < len(tokens) and tokens[j].tag in _CHUNK_TAGS:
            j += 1
        run_end = j
        # cut the run at its last head token
        while j > i and tokens[j - 1].tag not in _HEAD_TAGS:
            j -= 1
        # trim stop words from both ends; a trim can expose a non-head
        # tail, so iterate to a fixpoint
        lo, hi = i, j
        while lo < hi:
            if tokens[lo].is_stopword:
                lo += 1
                continue
            if tokens[hi - 1].is_stopword or tokens[hi - 1].tag not in _HEAD_TAGS:
                hi -= 1
                continue
            break
        if lo < hi:
            ranges.append((lo, hi))
        i = run_end
    return ranges


def extract_candidates(sent: Sentence, model: NGramModel) -> list[CandidateTerm]:
    """Union of noun chunks and model n-gram occurrences, by span start.

    A chunk and an n-gram covering the same span collapse into one
    candidate with source NOUN_CHUNK.
    """
    offset = sent.span[0]

    def slice_text(a: int, b: int) -> str:
        return sent.text[a - offset : b - offset]

    found: dict[tuple[int, int], CandidateTerm] = {}
    for lo, hi in _noun_chunks(sent):
        span = (sent.tokens[lo].span[0], sent.tokens[hi - 1].span[1])
        found[span] = CandidateTerm(
            text=slice_text(*span), source=NOUN_CHUNK, sentence_index=sent.index, span=span
        )
    surfaces = [t.surface.casefold() for t in sent.tokens]
    for gram in model.ngrams:
        size = len(gram)
        for i in range(len(surfaces) - size + 1):
            if tuple(surfaces[i : i + size]) != gram:
                continue
            span = (sent.tokens[i].span[0], sent.tokens[i + size - 1].span[1])
            if span in found:
                continue  # chunk wins on a span collision
            found[span] = CandidateTerm(
                text=slice_text(*span), source=NGRAM, sentence_index=sent.index, span=span
            )
    return sorted(found.values(), key=lambda c: (c.span[0], c.span[1], c.source))
