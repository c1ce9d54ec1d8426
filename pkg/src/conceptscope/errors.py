"""Exception taxonomy shared across the package."""


class ConceptScopeError(Exception):
    """Base class for all errors raised by this package."""


class ConfigError(ConceptScopeError):
    """Malformed configuration file or unknown configuration key."""


class OntologyError(ConceptScopeError):
    """Structurally invalid ontology: bad triples, missing or duplicate
    root, or a cycle in the super-topic relation."""


class TaxonomyError(ConceptScopeError):
    """Structurally invalid similarity taxonomy."""


class IntegrityError(ConceptScopeError):
    """Cross-artifact inconsistency, e.g. a detected concept that does
    not exist in the ontology the tree is being built against."""


class LookupUnavailableError(ConceptScopeError):
    """The external lookup service could not be reached and the query
    was not present in the recorded cache."""
