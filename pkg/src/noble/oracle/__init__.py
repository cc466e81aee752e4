"""Independent ground truth: embedding search, isomorphism, group catalog, corpus."""

from .corpus import generate_corpus
from .groups import group_catalog, group_core
from .iso import are_isomorphic
from .search import EmbeddingWitness, brute_force_noble

__all__ = [
    "EmbeddingWitness",
    "are_isomorphic",
    "brute_force_noble",
    "generate_corpus",
    "group_catalog",
    "group_core",
]
