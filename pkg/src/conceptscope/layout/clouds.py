"""Per-concept word clouds placed inside large-enough circles.

Related terms are the content words (noun, proper noun, adjective, verb,
adverb; stop words excluded) of the sentences a concept occurs in, minus
the tokens of the concept's own matches. The top terms by count join the
concept label inside the circle; the label sits at the center and the
rest walk outward on a deterministic spiral until they fit or the circle
is full.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass

from ..config import PipelineConfig
from ..hierarchy import ConceptTree
from ..matcher import ConceptDictionary
from ..text import Document

CONTENT_TAGS = frozenset({"NOUN", "PROPN", "ADJ", "VERB", "ADV"})

# glyph box approximation: average glyph advance as a fraction of font size
_GLYPH_WIDTH = 0.62
_SPIRAL_STEP_RAD = 0.35
_SPIRAL_MAX_STEPS = 2000


@dataclass(frozen=True)
class WordCloudItem:
    word: str
    weight: int
    x: float  # relative to the circle center
    y: float
    size: float  # font size in layout units


def _box(word: str, size: float) -> tuple[float, float]:
    return _GLYPH_WIDTH * size * len(word), size


def _fits_in_circle(x: float, y: float, w: float, h: float, radius: float) -> bool:
    dx = max(abs(x - w / 2.0), abs(x + w / 2.0))
    dy = max(abs(y - h / 2.0), abs(y + h / 2.0))
    return dx * dx + dy * dy <= radius * radius


def _overlaps(x: float, y: float, w: float, h: float, placed: list[tuple[float, float, float, float]]) -> bool:
    for px, py, pw, ph in placed:
        if abs(x - px) * 2.0 < w + pw and abs(y - py) * 2.0 < h + ph:
            return True
    return False


def _related_terms(
    concept_id: str, doc: Document, dictionary: ConceptDictionary, config: PipelineConfig
) -> list[tuple[str, int]]:
    sentence_ids = set(dictionary.occurrences.get(concept_id, ()))
    own_spans = [
        m.span for m in dictionary.matches if m.concept_id == concept_id
    ]
    counts: Counter = Counter()
    for sent in doc.sentences:
        if sent.index not in sentence_ids:
            continue
        for token in sent.tokens:
            if token.tag not in CONTENT_TAGS or token.is_stopword:
                continue
            if any(a <= token.span[0] and token.span[1] <= b for a, b in own_spans):
                continue  # the concept's own surface is the label, not context
            counts[token.surface.casefold()] += 1
    ranked = sorted(counts.items(), key=lambda item: (-item[1], item[0]))
    return [(w, c) for w, c in ranked if c >= config.cloud_min_count][: config.cloud_top_k]


def _place_cloud(label: str, label_weight: int, terms: list[tuple[str, int]], radius: float) -> list[WordCloudItem]:
    entries = [(label, label_weight)] + terms
    w_max = max(weight for _, weight in entries)
    widest = max(len(word) * math.sqrt(weight) for word, weight in entries)
    scale = min(
        radius / (4.0 * math.sqrt(w_max)),
        1.6 * radius / (_GLYPH_WIDTH * widest),
    )
    # the label must always fit at the center, shrink if necessary
    label_size = scale * math.sqrt(label_weight)
    lw, lh = _box(label, label_size)
    half_diag = math.hypot(lw / 2.0, lh / 2.0)
    if half_diag > 0.95 * radius:
        scale *= 0.95 * radius / half_diag
        label_size = scale * math.sqrt(label_weight)
        lw, lh = _box(label, label_size)

    items = [WordCloudItem(word=label, weight=label_weight, x=0.0, y=0.0, size=label_size)]
    placed = [(0.0, 0.0, lw, lh)]
    spiral_b = radius / (2.0 * math.pi * 6.0)
    for word, weight in terms:
        size = scale * math.sqrt(weight)
        w, h = _box(word, size)
        for step in range(_SPIRAL_MAX_STEPS):
            theta = step * _SPIRAL_STEP_RAD
            r = spiral_b * theta
            if r > radius:
                break
            x = r * math.cos(theta)
            y = r * math.sin(theta)
            if not _fits_in_circle(x, y, w, h, radius):
                continue
            if _overlaps(x, y, w, h, placed):
                continue
            items.append(WordCloudItem(word=word, weight=weight, x=x, y=y, size=size))
            placed.append((x, y, w, h))
            break
        # words that never found a slot are dropped rather than shrunk
    return items


def build_word_clouds(
    tree: ConceptTree,
    doc: Document,
    dictionary: ConceptDictionary,
    config: PipelineConfig,
) -> dict[str, list[WordCloudItem]]:
    """Clouds for every detected concept whose circle is cloud-sized.

    Circle radii are recomputed from frequencies alone (the same scale
    rule the layout uses), so cloud construction needs no packing data.
    """
    total = sum(dictionary.frequency.values())
    if total == 0:
        return {}
    k = math.sqrt(config.area_fraction * config.canvas_size**2 / (math.pi * total))
    clouds: dict[str, list[WordCloudItem]] = {}
    for concept_id in sorted(dictionary.frequency):
        frequency = dictionary.frequency[concept_id]
        radius = k * math.sqrt(frequency)
        if radius < config.cloud_min_radius:
            continue
        label = tree.index[concept_id].label
        terms = _related_terms(concept_id, doc, dictionary, config)
        clouds[concept_id] = _place_cloud(label, frequency, terms, radius)
    return clouds
