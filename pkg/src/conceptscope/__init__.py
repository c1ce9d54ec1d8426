"""conceptscope: ontology-grounded document analysis.

Detects domain concepts in plain-text documents by matching noun chunks
and collocations against a reference ontology, reconstructs the detected
concepts' hierarchy, and lays the result out as a bubble treemap with
per-concept word clouds, ready to serve over HTTP.
"""

from .candidates import CandidateTerm, NGramModel, extract_candidates, train_ngram_model
from .config import PipelineConfig, load_config, parse_config_text
from .errors import (
    ConceptScopeError,
    ConfigError,
    IntegrityError,
    LookupUnavailableError,
    OntologyError,
    TaxonomyError,
)
from .hierarchy import (
    ComparisonSummary,
    ConceptNode,
    ConceptTree,
    build_concept_tree,
    compare_trees,
    comparison_to_dict,
    serialize_tree,
    tree_to_dict,
)
from .matcher import (
    ConceptDictionary,
    ConceptMatch,
    FuzzyCandidate,
    LookupCache,
    LookupClient,
    SimilarityTaxonomy,
    detect_concepts,
    fuzzy_resolve,
    load_similarity_taxonomy,
    wu_palmer,
)
from .ontology import (
    Concept,
    ConceptCard,
    OntologyStore,
    TripleRecord,
    concept_card,
    load_ontology,
    lookup_exact,
    parse_triples,
    path_to_root,
    top_level_ancestor,
)
from .text import (
    Document,
    Sentence,
    Token,
    analyze_document,
    analyze_sentence,
    load_document,
    normalize_term,
    split_sentences,
)

__version__ = "0.1.0"

__all__ = [
    "CandidateTerm",
    "ComparisonSummary",
    "Concept",
    "ConceptCard",
    "ConceptDictionary",
    "ConceptMatch",
    "ConceptNode",
    "ConceptScopeError",
    "ConceptTree",
    "ConfigError",
    "Document",
    "FuzzyCandidate",
    "IntegrityError",
    "LookupCache",
    "LookupClient",
    "LookupUnavailableError",
    "NGramModel",
    "OntologyError",
    "OntologyStore",
    "PipelineConfig",
    "Sentence",
    "SimilarityTaxonomy",
    "TaxonomyError",
    "Token",
    "TripleRecord",
    "analyze_document",
    "analyze_sentence",
    "build_concept_tree",
    "compare_trees",
    "comparison_to_dict",
    "concept_card",
    "detect_concepts",
    "extract_candidates",
    "fuzzy_resolve",
    "load_config",
    "load_document",
    "load_ontology",
    "load_similarity_taxonomy",
    "lookup_exact",
    "normalize_term",
    "parse_config_text",
    "parse_triples",
    "path_to_root",
    "serialize_tree",
    "split_sentences",
    "top_level_ancestor",
    "train_ngram_model",
    "tree_to_dict",
    "wu_palmer",
]
