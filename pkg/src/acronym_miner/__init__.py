"""Mining of ``Long Form (SF)`` acronym definitions from multilingual news."""

from .cluster import Cluster, ClusterConfig, cluster_long_forms, edit_distance, normalized_distance, similarity
from .corpus import Article, parse_article_stream, segment_sentences, tokenize
from .extractor import PairOccurrence, extract_pairs, find_sf_candidates, match_long_form
from .filters import Stoplist, check_lf, check_sf, default_stoplist, load_stoplist
from .store import PairStore, aggregate, categorize_lf, compute_stats, export, merge_stores

__version__ = "0.1.0"

__all__ = [
    "Article",
    "Cluster",
    "ClusterConfig",
    "PairOccurrence",
    "PairStore",
    "Stoplist",
    "aggregate",
    "categorize_lf",
    "check_lf",
    "check_sf",
    "cluster_long_forms",
    "compute_stats",
    "default_stoplist",
    "edit_distance",
    "export",
    "extract_pairs",
    "find_sf_candidates",
    "load_stoplist",
    "match_long_form",
    "merge_stores",
    "normalized_distance",
    "parse_article_stream",
    "segment_sentences",
    "similarity",
    "tokenize",
]
