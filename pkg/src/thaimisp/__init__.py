"""Misspelling-aware text tools for Thai social media."""

from .classifier import (
    EvalReport,
    EvalSubset,
    FeatureMode,
    SentimentModel,
    TrainConfig,
    evaluate,
    featurize,
    train,
)
from .detector import MispTag, RunAnalysis, collapse_runs, correct, detect
from .fixtures import fixture_lexicon, fixture_wordlist, pattern_pairs
from .lexicon import (
    Intention,
    Lexicon,
    LexiconEntry,
    LexiconError,
    PatternLabel,
    load_lexicon,
    load_wordlist,
    lookup,
)
from .mae import (
    EmbeddingStore,
    align_subtokens,
    embed_token,
    generate_embeddings,
    load_embeddings,
    mae_vector,
)
from .mst import AugmentedSentence, annotate, strip_tags
from .patterns import ClusterDiff, classify_pattern, cluster_diff
from .script import CharClass, classify_char, grapheme_clusters
from .segmenter import Sentiment, TokenizedSentence, segment
from .stats import (
    AnnotationRecord,
    TermObservations,
    cohen_kappa,
    corpus_summary,
    label_entropy,
    pairwise_kappa_matrix,
)

__version__ = "0.1.0"

__all__ = [
    "AnnotationRecord",
    "AugmentedSentence",
    "CharClass",
    "ClusterDiff",
    "EmbeddingStore",
    "EvalReport",
    "EvalSubset",
    "FeatureMode",
    "Intention",
    "Lexicon",
    "LexiconEntry",
    "LexiconError",
    "MispTag",
    "PatternLabel",
    "RunAnalysis",
    "Sentiment",
    "SentimentModel",
    "TermObservations",
    "TokenizedSentence",
    "TrainConfig",
    "align_subtokens",
    "annotate",
    "classify_char",
    "classify_pattern",
    "cluster_diff",
    "cohen_kappa",
    "collapse_runs",
    "corpus_summary",
    "correct",
    "detect",
    "embed_token",
    "evaluate",
    "featurize",
    "fixture_lexicon",
    "fixture_wordlist",
    "generate_embeddings",
    "grapheme_clusters",
    "label_entropy",
    "load_embeddings",
    "load_lexicon",
    "load_wordlist",
    "lookup",
    "mae_vector",
    "pairwise_kappa_matrix",
    "pattern_pairs",
    "segment",
    "strip_tags",
    "train",
]
