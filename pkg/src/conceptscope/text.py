"""Document loading, sentence splitting, and part-of-speech tagging.

Everything in this module is rule based: identical input bytes yield an
identical Document, character spans included. No stemming and no
lemmatization take place at any stage; surface forms are preserved
verbatim and later stages case-fold on their own.
"""

from __future__ import annotations

import hashlib
import re
import unicodedata
from dataclasses import dataclass, replace
from importlib import resources

TAG_SET = frozenset(
    {"NOUN", "PROPN", "ADJ", "VERB", "ADV", "DET", "ADP", "NUM", "PUNCT", "OTHER"}
)

# Case-folded, period included. A trailing "." after one of these never
# closes a sentence ("et al." is covered by its final token "al.").
ABBREVIATIONS = frozenset(
    {
        "fig.",
        "figs.",
        "eq.",
        "eqs.",
        "al.",
        "e.g.",
        "i.e.",
        "etc.",
        "cf.",
        "vs.",
        "dr.",
        "mr.",
        "mrs.",
        "ms.",
        "prof.",
        "st.",
        "no.",
        "vol.",
        "pp.",
        "ca.",
        "approx.",
        "resp.",
        "u.s.",
    }
)

# A token is either a word (internal hyphens/apostrophes allowed) or a
# single non-space punctuation character.
_TOKEN_RE = re.compile(r"[^\W_]+(?:['’-][^\W_]+)*|[^\w\s]")
_TERMINALS = frozenset(".?!")


def _read_data(name: str) -> str:
    return resources.files("conceptscope.data").joinpath(name).read_text("utf-8")


STOPWORDS: frozenset = frozenset(
    line.strip().casefold() for line in _read_data("stopwords.txt").splitlines() if line.strip()
)


def _load_lexicon() -> dict:
    lexicon = {}
    for line in _read_data("tag_lexicon.tsv").splitlines():
        line = line.strip()
        if not line:
            continue
        word, tag = line.split("\t")
        if tag not in TAG_SET:
            raise ValueError(f"bundled lexicon contains unknown tag {tag!r}")
        lexicon[word.casefold()] = tag
    return lexicon


LEXICON: dict = _load_lexicon()


@dataclass(frozen=True)
class Token:
    surface: str
    tag: str
    span: tuple[int, int]  # into Document.raw_text
    is_stopword: bool


@dataclass(frozen=True)
class Sentence:
    index: int
    text: str
    span: tuple[int, int]  # into Document.raw_text
    tokens: tuple[Token, ...] = ()


@dataclass(frozen=True)
class Document:
    id: str
    title: str
    raw_text: str
    sentences: tuple[Sentence, ...] = ()


def load_document(source: bytes | str, title: str = "") -> Document:
    """Build a Document from UTF-8 bytes (or an already-decoded string).

    The id is the first 12 hex digits of the SHA-256 of the raw bytes,
    so the same content always gets the same id. Invalid UTF-8 raises
    UnicodeDecodeError.
    """
    if isinstance(source, bytes):
        raw_text = source.decode("utf-8")
        data = source
    else:
        raw_text = source
        data = source.encode("utf-8")
    doc_id = hashlib.sha256(data).hexdigest()[:12]
    return Document(id=doc_id, title=title or doc_id, raw_text=raw_text)


def _is_boundary_dot(text: str, dot: int) -> bool:
    nxt = text[dot + 1] if dot + 1 < len(text) else ""
    if nxt and nxt.isalnum():
        return False  # internal dot: "e.g.", "3.14", "U.S."
    k = dot
    while k > 0 and (text[k - 1].isalnum() or text[k - 1] == "."):
        k -= 1
    word = text[k : dot + 1].casefold()
    return word not in ABBREVIATIONS


def split_sentences(doc: Document) -> Document:
    """Populate doc.sentences by splitting raw_text on . ? ! boundaries.

    Abbreviations from the bundled list do not split; a blank line closes
    an unpunctuated sentence. Tokens are left empty here.
    """
    text = doc.raw_text
    n = len(text)
    spans: list[tuple[int, int]] = []
    start: int | None = None
    i = 0
    while i < n:
        ch = text[i]
        if start is None:
            if not ch.isspace():
                start = i
            i += 1
            continue
        if ch in _TERMINALS:
            j = i + 1
            while j < n and text[j] in _TERMINALS:
                j += 1
            if ch == "." and j == i + 1 and not _is_boundary_dot(text, i):
                i = j
                continue
            spans.append((start, j))
            start = None
            i = j
            continue
        if ch == "\n":
            j = i
            newlines = 0
            while j < n and text[j].isspace():
                newlines += text[j] == "\n"
                j += 1
            if newlines >= 2:
                end = i
                while end > start and text[end - 1].isspace():
                    end -= 1
                if end > start:
                    spans.append((start, end))
                start = None
            i = j
            continue
        i += 1
    if start is not None:
        end = n
        while end > start and text[end - 1].isspace():
            end -= 1
        if end > start:
            spans.append((start, end))
    sentences = tuple(
        Sentence(index=k, text=text[a:b], span=(a, b)) for k, (a, b) in enumerate(spans)
    )
    return replace(doc, sentences=sentences)


def _tag_suffix(folded: str) -> str:
    if folded.endswith("ly"):
        return "ADV"
    if folded.endswith("ing"):
        return "VERB"
    if folded.endswith("ed"):
        return "VERB"
    if folded.endswith(("tion", "tions", "sion", "sions", "ment", "ments")):
        return "NOUN"
    return "NOUN"


def _tag_hyphenated(folded: str) -> str:
    last = folded.rsplit("-", 1)[-1]
    tag = LEXICON.get(last) or _tag_suffix(last)
    if tag == "ADJ" or (tag == "VERB" and last.endswith(("ed", "ing"))):
        return "ADJ"  # participle or adjectival last segment modifies the head
    return tag


def _tag_word(surface: str, sentence_pos: int) -> str:
    if not any(c.isalnum() for c in surface):
        return "PUNCT"
    folded = surface.casefold()
    if folded in LEXICON:
        return LEXICON[folded]
    if surface.isdigit():
        return "NUM"
    if any(c.isdigit() for c in surface):
        return "ADJ"  # "2D", "3d": digit-bearing tokens act as modifiers
    if sentence_pos > 0 and surface[:1].isupper():
        return "PROPN"
    if "-" in surface:
        return _tag_hyphenated(folded)
    return _tag_suffix(folded)


def analyze_sentence(sent: Sentence) -> Sentence:
    """Tokenize and tag one sentence; token spans are absolute."""
    base = sent.span[0]
    tokens = []
    for pos, match in enumerate(_TOKEN_RE.finditer(sent.text)):
        surface = match.group(0)
        tokens.append(
            Token(
                surface=surface,
                tag=_tag_word(surface, pos),
                span=(base + match.start(), base + match.end()),
                is_stopword=surface.casefold() in STOPWORDS,
            )
        )
    return replace(sent, tokens=tuple(tokens))


def analyze_document(doc: Document) -> Document:
    """Split into sentences and analyze each one."""
    doc = split_sentences(doc)
    return replace(doc, sentences=tuple(analyze_sentence(s) for s in doc.sentences))


def normalize_term(term: str) -> str:
    """Shared surface normalization for matching: NFC, case-fold, treat
    hyphen and space as the same separator, collapse whitespace."""
    norm = unicodedata.normalize("NFC", term).casefold().replace("-", " ")
    return " ".join(norm.split())
