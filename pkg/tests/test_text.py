from __future__ import annotations

import pytest

from conceptscope import analyze_document, load_document, normalize_term, split_sentences
from conceptscope.text import TAG_SET


def analyze(text: str):
    return analyze_document(load_document(text))


def tags_of(text: str) -> list[tuple[str, str]]:
    doc = analyze(text)
    return [(t.surface, t.tag) for s in doc.sentences for t in s.tokens]


def sentence_texts(text: str) -> list[str]:
    return [s.text for s in split_sentences(load_document(text)).sentences]


class TestLoadDocument:
    def test_id_is_stable_across_calls(self):
        a = load_document(b"same content")
        b = load_document(b"same content")
        assert a.id == b.id
        assert len(a.id) == 12
        assert all(c in "0123456789abcdef" for c in a.id)

    def test_str_and_bytes_agree(self):
        assert load_document("café").id == load_document("café".encode()).id

    def test_different_content_different_id(self):
        assert load_document(b"a").id != load_document(b"b").id

    def test_title_defaults_to_id(self):
        doc = load_document(b"body")
        assert doc.title == doc.id
        assert load_document(b"body", title="report").title == "report"

    def test_invalid_utf8_raises(self):
        with pytest.raises(UnicodeDecodeError):
            load_document(b"\xff\xfe\x00bad")


class TestSplitSentences:
    def test_simple_terminators(self):
        assert sentence_texts("One. Two? Three!") == ["One.", "Two?", "Three!"]

    def test_terminator_runs_stay_together(self):
        # a run like "?!" or "..." is one boundary, never several
        assert sentence_texts("Really?! Yes... fine.") == ["Really?!", "Yes...", "fine."]

    def test_abbreviations_do_not_split(self):
        text = "See Fig. 2 for details. As shown by Smith et al. the rest follows."
        assert sentence_texts(text) == [
            "See Fig. 2 for details.",
            "As shown by Smith et al. the rest follows.",
        ]

    def test_decimal_numbers_do_not_split(self):
        assert sentence_texts("Pi is 3.14 roughly. True.") == ["Pi is 3.14 roughly.", "True."]

    def test_blank_line_closes_unterminated_sentence(self):
        text = "A heading without punctuation\n\nThen a body sentence."
        assert sentence_texts(text) == [
            "A heading without punctuation",
            "Then a body sentence.",
        ]

    def test_single_newline_does_not_close(self):
        assert sentence_texts("wrapped\nline.") == ["wrapped\nline."]

    def test_eof_closes_last_sentence(self):
        assert sentence_texts("no final stop") == ["no final stop"]

    def test_empty_and_whitespace_only(self):
        assert sentence_texts("") == []
        assert sentence_texts("  \n\n  ") == []

    def test_spans_slice_the_raw_text(self):
        text = "First one. Second one.\n\nThird"
        doc = split_sentences(load_document(text))
        spans = [s.span for s in doc.sentences]
        assert spans == sorted(spans)
        for sentence in doc.sentences:
            a, b = sentence.span
            assert 0 <= a < b <= len(text)
            assert text[a:b] == sentence.text

    def test_indexes_are_sequential(self):
        doc = split_sentences(load_document("A. B. C."))
        assert [s.index for s in doc.sentences] == [0, 1, 2]


class TestTagging:
    def test_tags_are_in_the_fixed_set(self):
        doc = analyze("The quick 3.14 fox e.g. jumps high-speed tests NOW.")
        for s in doc.sentences:
            for t in s.tokens:
                assert t.tag in TAG_SET

    def test_lexicon_rules(self):
        pairs = dict(tags_of("the cat quickly runs under nine tables"))
        assert pairs["the"] == "DET"
        assert pairs["under"] == "ADP"
        assert pairs["quickly"] == "ADV"
        assert pairs["nine"] == "NUM"

    def test_digits_and_mixed_alphanumerics(self):
        pairs = dict(tags_of("version 42 of x86 chips"))
        assert pairs["42"] == "NUM"
        assert pairs["x86"] == "ADJ"

    def test_proper_noun_needs_mid_sentence_capital(self):
        doc = analyze("Paris is lovely. We adore Paris.")
        first = doc.sentences[0].tokens[0]
        assert first.surface == "Paris" and first.tag != "PROPN"
        last = [t for t in doc.sentences[1].tokens if t.surface == "Paris"][0]
        assert last.tag == "PROPN"

    def test_suffix_fallbacks(self):
        pairs = dict(tags_of("the compiler walked happily toward normalization"))
        assert pairs["walked"] == "VERB"
        assert pairs["happily"] == "ADV"
        assert pairs["normalization"] == "NOUN"
        assert pairs["compiler"] == "NOUN"

    def test_ing_nouns_are_overridden(self):
        pairs = dict(tags_of("machine learning and careful testing beat guessing"))
        assert pairs["learning"] == "NOUN"
        assert pairs["testing"] == "NOUN"
        assert pairs["guessing"] == "VERB"

    def test_hyphenated_modifier_becomes_adjective(self):
        pairs = dict(tags_of("an object-oriented design with well-designed parts"))
        assert pairs["object-oriented"] == "ADJ"
        assert pairs["well-designed"] == "ADJ"

    def test_punctuation_tokens(self):
        pairs = tags_of("wait, really?")
        assert (",", "PUNCT") in pairs
        assert ("?", "PUNCT") in pairs

    def test_stopword_flag(self):
        doc = analyze("the network of things")
        flags = {t.surface: t.is_stopword for t in doc.sentences[0].tokens}
        assert flags["the"] and flags["of"]
        assert not flags["network"]

    def test_token_spans_slice_the_raw_text(self):
        text = "Some spans, (nested) ones too. And more."
        doc = analyze(text)
        for s in doc.sentences:
            for t in s.tokens:
                assert text[t.span[0]:t.span[1]] == t.surface

    def test_apostrophes_stay_inside_tokens(self):
        doc = analyze("it's the model's output")
        surfaces = [t.surface for t in doc.sentences[0].tokens]
        assert "it's" in surfaces
        assert "model's" in surfaces


class TestNormalizeTerm:
    def test_casefold_and_hyphen(self):
        assert normalize_term("Object-Oriented  Programming") == "object oriented programming"

    def test_unicode_composition(self):
        assert normalize_term("café") == normalize_term("café")

    def test_sharp_s_casefolds(self):
        assert normalize_term("STRAßE") == "strasse"

    def test_whitespace_collapse(self):
        assert normalize_term("  a \t b\n c ") == "a b c"
