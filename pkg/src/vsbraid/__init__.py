"""Words, presentations and representations of the virtual singular braid monoid."""

from __future__ import annotations

from .equivalence import Budget, RewriteStep, Verdict, apply_relation_at, replay, search_equivalent
from .morphisms import (
    Permutation,
    is_pure,
    normalize_to,
    permutation_of,
    reduce_to_subscript_one,
    to_fusing,
    to_standard,
)
from .presentations import CATALOGS, PresentationCatalog, Relation, get_catalog, instantiate_relations
from .representation import (
    BasisState,
    apply_word,
    fingerprint,
    rep_equal,
    verify_operator_conditions,
    verify_relations,
)
from .schreier import SchreierIndex, decompose, representative_of, rewrite_pure, schreier_system
from .words import BraidWord, Kind, Letter, WordError, format_word, parse_word

__all__ = [
    "BasisState",
    "BraidWord",
    "Budget",
    "CATALOGS",
    "Kind",
    "Letter",
    "Permutation",
    "PresentationCatalog",
    "Relation",
    "RewriteStep",
    "SchreierIndex",
    "Verdict",
    "WordError",
    "apply_relation_at",
    "apply_word",
    "decompose",
    "fingerprint",
    "format_word",
    "get_catalog",
    "instantiate_relations",
    "is_pure",
    "normalize_to",
    "parse_word",
    "permutation_of",
    "reduce_to_subscript_one",
    "rep_equal",
    "replay",
    "representative_of",
    "rewrite_pure",
    "schreier_system",
    "search_equivalent",
    "to_fusing",
    "to_standard",
    "verify_operator_conditions",
    "verify_relations",
]
