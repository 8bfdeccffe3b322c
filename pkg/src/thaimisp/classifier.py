"""Sentence featurization, linear sentiment model, and the experiment harness.

The model is multinomial logistic regression over mean token embeddings
plus four misspelling-tag count features, trained by full-batch gradient
descent from a zero initialization: training is fully deterministic.
This deliberately replaces a recurrent model; the question under test is
whether the enrichment features carry signal, not which architecture
reads them.  Tag positions are discarded (a linear model could not use
them anyway).
"""

from __future__ import annotations

import json
import warnings
from dataclasses import dataclass
from enum import Enum
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from .detector import MispTag, correct, detect
from .lexicon import Lexicon
from .mae import EmbeddingStore, embed_token, mae_vector
from .mst import annotate
from .segmenter import Sentiment, TokenizedSentence

CLASSES: tuple[Sentiment, ...] = (
    Sentiment.NEGATIVE,
    Sentiment.NEUTRAL,
    Sentiment.POSITIVE,
)
_CLASS_INDEX = {label: i for i, label in enumerate(CLASSES)}

TAG_FEATURE_ORDER: tuple[MispTag, ...] = (
    MispTag.LOL,
    MispTag.REP,
    MispTag.INT,
    MispTag.MSP,
)
N_TAG_FEATURES = len(TAG_FEATURE_ORDER)

MODEL_FORMAT = "thaimisp-model"
MODEL_VERSION = 1


class FeatureMode(Enum):
    NONE = "none"
    NORM = "norm"
    MAE = "mae"
    MST = "mst"
    MAE_MST = "mae+mst"

    @property
    def uses_tags(self) -> bool:
        return self in (FeatureMode.MST, FeatureMode.MAE_MST)

    @property
    def uses_average(self) -> bool:
        return self in (FeatureMode.MAE, FeatureMode.MAE_MST)


class EvalSubset(Enum):
    ALL = "all"
    MISP_ONLY = "misp"
    NORM_ONLY = "norm"


@dataclass(frozen=True)
class TrainConfig:
    epochs: int = 500
    learning_rate: float = 0.1
    seed: int = 0


@dataclass(frozen=True)
class SentimentModel:
    weights: np.ndarray  # (3, dim + 4)
    bias: np.ndarray  # (3,)
    mode: FeatureMode
    seed: int

    @property
    def dim(self) -> int:
        return self.weights.shape[1] - N_TAG_FEATURES


@dataclass(frozen=True)
class EvalReport:
    micro_f1: float
    per_class_f1: dict[str, float]
    confusion: list[list[int]]  # rows gold, cols predicted
    subset: EvalSubset

    def to_json_dict(self) -> dict:
        return {
            "micro_f1": self.micro_f1,
            "per_class_f1": self.per_class_f1,
            "confusion": self.confusion,
            "subset": self.subset.value,
        }


def featurize(
    sentence: TokenizedSentence,
    mode: FeatureMode,
    store: EmbeddingStore,
    lex: Lexicon,
) -> np.ndarray:
    """Mean per-token vector (dim) followed by the four tag counts."""
    features = np.zeros(store.dim + N_TAG_FEATURES)
    if not sentence.tokens:
        return features
    total = np.zeros(store.dim)
    for token in sentence.tokens:
        if mode is FeatureMode.NORM:
            vector, _ = embed_token(store, correct(token, lex))
        elif mode.uses_average:
            vector = mae_vector(store, token, lex)
        else:  # NONE and MST read the raw token
            vector, _ = embed_token(store, token)
        total += vector
    features[: store.dim] = total / len(sentence.tokens)
    if mode.uses_tags:
        counts = annotate(sentence, lex).tag_counts
        for i, tag in enumerate(TAG_FEATURE_ORDER):
            features[store.dim + i] = counts[tag]
    return features


def _softmax(scores: np.ndarray) -> np.ndarray:
    shifted = scores - scores.max(axis=1, keepdims=True)
    exp = np.exp(shifted)
    return exp / exp.sum(axis=1, keepdims=True)


def fit_logistic(
    features: np.ndarray,
    class_indices: np.ndarray,
    epochs: int,
    learning_rate: float,
) -> tuple[np.ndarray, np.ndarray, list[float]]:
    """Full-batch gradient descent on cross-entropy from zero weights.

    Returns (weights, bias, per-epoch loss before each update).
    """
    n, d = features.shape
    k = len(CLASSES)
    weights = np.zeros((k, d))
    bias = np.zeros(k)
    onehot = np.zeros((n, k))
    onehot[np.arange(n), class_indices] = 1.0
    losses: list[float] = []
    for _ in range(epochs):
        probs = _softmax(features @ weights.T + bias)
        losses.append(
            float(-np.mean(np.log(probs[np.arange(n), class_indices] + 1e-300)))
        )
        grad = probs - onehot
        weights -= learning_rate * (grad.T @ features) / n
        bias -= learning_rate * grad.mean(axis=0)
    return weights, bias, losses


def train(
    corpus: Sequence[TokenizedSentence],
    mode: FeatureMode,
    store: EmbeddingStore,
    lex: Lexicon,
    config: TrainConfig = TrainConfig(),
) -> SentimentModel:
    """Fit the sentiment model; deterministic for a given corpus and config."""
    if not corpus:
        raise ValueError("training corpus is empty")
    for i, sentence in enumerate(corpus):
        if sentence.label is None:
            raise ValueError(f"training sentence {i} has no label")
    labels = np.array([_CLASS_INDEX[s.label] for s in corpus])
    if len(set(labels.tolist())) == 1:
        warnings.warn("training corpus contains a single class", stacklevel=2)
    features = np.stack([featurize(s, mode, store, lex) for s in corpus])
    weights, bias, _ = fit_logistic(
        features, labels, config.epochs, config.learning_rate
    )
    return SentimentModel(weights=weights, bias=bias, mode=mode, seed=config.seed)


def predict(
    model: SentimentModel, sentences: Iterable[TokenizedSentence],
    store: EmbeddingStore, lex: Lexicon,
) -> list[Sentiment]:
    features = [featurize(s, model.mode, store, lex) for s in sentences]
    if not features:
        return []
    scores = np.stack(features) @ model.weights.T + model.bias
    return [CLASSES[i] for i in np.argmax(scores, axis=1)]


def micro_f1_from_confusion(confusion: np.ndarray) -> float:
    """Pooled-count F1. Equals accuracy for single-label multiclass."""
    tp = float(np.trace(confusion))
    fp = float(confusion.sum() - np.trace(confusion))
    fn = fp  # every false positive is another class's false negative
    if tp == 0 and fp == 0:
        return 0.0
    precision = tp / (tp + fp)
    recall = tp / (tp + fn)
    if precision + recall == 0:
        return 0.0
    return 2 * precision * recall / (precision + recall)


def _per_class_f1(confusion: np.ndarray) -> dict[str, float]:
    out: dict[str, float] = {}
    for i, label in enumerate(CLASSES):
        tp = confusion[i, i]
        fp = confusion[:, i].sum() - tp
        fn = confusion[i, :].sum() - tp
        denom = 2 * tp + fp + fn
        out[label.value] = float(2 * tp / denom) if denom else 0.0
    return out


def has_misspelling(sentence: TokenizedSentence, lex: Lexicon) -> bool:
    return any(detect(t, lex) is not MispTag.NULL for t in sentence.tokens)


def normalize_sentence(
    sentence: TokenizedSentence, lex: Lexicon
) -> TokenizedSentence:
    return sentence.with_tokens(tuple(correct(t, lex) for t in sentence.tokens))


def evaluate(
    model: SentimentModel,
    corpus: Sequence[TokenizedSentence],
    store: EmbeddingStore,
    lex: Lexicon,
    subset: EvalSubset = EvalSubset.ALL,
) -> EvalReport:
    """Score the model on a labeled corpus, optionally on a subset.

    MISP_ONLY keeps sentences with at least one detected misspelling;
    NORM_ONLY evaluates those same sentences with every token corrected
    first.
    """
    for i, sentence in enumerate(corpus):
        if sentence.label is None:
            raise ValueError(f"evaluation sentence {i} has no label")
    selected = list(corpus)
    if subset is not EvalSubset.ALL:
        selected = [s for s in selected if has_misspelling(s, lex)]
        if subset is EvalSubset.NORM_ONLY:
            selected = [normalize_sentence(s, lex) for s in selected]
    if not selected:
        raise ValueError(f"subset {subset.value!r} is empty for this corpus")
    predictions = predict(model, selected, store, lex)
    confusion = np.zeros((len(CLASSES), len(CLASSES)), dtype=int)
    for sentence, predicted in zip(selected, predictions):
        confusion[_CLASS_INDEX[sentence.label], _CLASS_INDEX[predicted]] += 1
    micro = micro_f1_from_confusion(confusion)
    accuracy = float(np.trace(confusion) / confusion.sum())
    # Single-label multiclass identity; a failure here is an internal bug.
    assert abs(micro - accuracy) < 1e-12
    return EvalReport(
        micro_f1=micro,
        per_class_f1=_per_class_f1(confusion),
        confusion=confusion.tolist(),
        subset=subset,
    )


def save_model(model: SentimentModel, path: str | Path) -> None:
    payload = {
        "format": MODEL_FORMAT,
        "version": MODEL_VERSION,
        "dim": model.dim,
        "mode": model.mode.value,
        "seed": model.seed,
        "classes": [c.value for c in CLASSES],
        "weights": model.weights.tolist(),
        "bias": model.bias.tolist(),
    }
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(payload, fh, sort_keys=True, indent=None, separators=(",", ":"))
        fh.write("\n")


def load_model(path: str | Path) -> SentimentModel:
    with open(path, encoding="utf-8") as fh:
        payload = json.load(fh)
    if payload.get("format") != MODEL_FORMAT:
        raise ValueError(f"{path}: not a {MODEL_FORMAT} file")
    if payload.get("version") != MODEL_VERSION:
        raise ValueError(f"{path}: unsupported model version {payload.get('version')}")
    weights = np.array(payload["weights"], dtype=np.float64)
    bias = np.array(payload["bias"], dtype=np.float64)
    if weights.shape != (len(CLASSES), payload["dim"] + N_TAG_FEATURES):
        raise ValueError(f"{path}: weight shape does not match declared dim")
    return SentimentModel(
        weights=weights,
        bias=bias,
        mode=FeatureMode(payload["mode"]),
        seed=int(payload["seed"]),
    )


def save_report(report: EvalReport, path: str | Path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(
            report.to_json_dict(), fh, sort_keys=True, separators=(",", ":")
        )
        fh.write("\n")
