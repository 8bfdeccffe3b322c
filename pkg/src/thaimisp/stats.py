"""Corpus statistics: agreement, per-term label entropy, frequencies.

Annotations arrive as JSONL records ``{item_id, annotator_id, label}``;
the annotated corpus carries per-sentence misspelling spans.  Agreement
is pairwise Cohen's kappa over the items a pair of annotators shares.
Entropy is reported in bits.
"""

from __future__ import annotations

import json
import math
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .lexicon import Intention


class AnnotationFormatError(ValueError):
    """Raised for malformed annotation or corpus records."""


@dataclass(frozen=True)
class AnnotationRecord:
    item_id: str
    annotator_id: str
    label: Intention


@dataclass(frozen=True)
class TermObservations:
    term: str
    labels: tuple[Intention, ...]

    def __post_init__(self) -> None:
        if not self.labels:
            raise ValueError("labels must be non-empty")


def cohen_kappa(a_labels: Sequence, b_labels: Sequence) -> float:
    """Chance-corrected agreement, expected agreement from each rater's
    own marginal distribution.  Defined as 1.0 when both raters are
    constant on the same label (expected agreement 1)."""
    if not a_labels or len(a_labels) != len(b_labels):
        raise ValueError("label lists must be non-empty and equally long")
    n = len(a_labels)
    observed = sum(1 for x, y in zip(a_labels, b_labels) if x == y) / n
    count_a = Counter(a_labels)
    count_b = Counter(b_labels)
    expected = sum(
        (count_a[label] / n) * (count_b[label] / n)
        for label in set(count_a) | set(count_b)
    )
    if expected >= 1.0 - 1e-15:
        return 1.0 if observed == 1.0 else 0.0
    return (observed - expected) / (1.0 - expected)


def read_annotations(lines: Iterable[str]) -> list[AnnotationRecord]:
    records: list[AnnotationRecord] = []
    seen: set[tuple[str, str]] = set()
    for lineno, raw in enumerate(lines, start=1):
        if not raw.strip():
            continue
        try:
            obj = json.loads(raw)
        except json.JSONDecodeError as exc:
            raise AnnotationFormatError(f"line {lineno}: invalid JSON: {exc}") from None
        try:
            record = AnnotationRecord(
                item_id=str(obj["item_id"]),
                annotator_id=str(obj["annotator_id"]),
                label=Intention(obj["label"]),
            )
        except (KeyError, ValueError) as exc:
            raise AnnotationFormatError(f"line {lineno}: {exc}") from None
        key = (record.item_id, record.annotator_id)
        if key in seen:
            raise AnnotationFormatError(
                f"line {lineno}: duplicate (item_id, annotator_id) {key}"
            )
        seen.add(key)
        records.append(record)
    return records


def pairwise_kappa_matrix(
    records: Sequence[AnnotationRecord],
) -> tuple[list[str], list[list[float | None]]]:
    """Symmetric kappa matrix over annotators; None where a pair shares
    no items.  Annotators are ordered by id."""
    by_annotator: dict[str, dict[str, Intention]] = defaultdict(dict)
    for record in records:
        by_annotator[record.annotator_id][record.item_id] = record.label
    annotators = sorted(by_annotator)
    if len(annotators) < 2:
        raise ValueError("need at least two annotators")
    size = len(annotators)
    matrix: list[list[float | None]] = [[None] * size for _ in range(size)]
    for i in range(size):
        matrix[i][i] = 1.0
        for j in range(i + 1, size):
            items_i = by_annotator[annotators[i]]
            items_j = by_annotator[annotators[j]]
            shared = sorted(set(items_i) & set(items_j))
            if not shared:
                continue
            kappa = cohen_kappa(
                [items_i[item] for item in shared],
                [items_j[item] for item in shared],
            )
            matrix[i][j] = matrix[j][i] = kappa
    return annotators, matrix


def label_entropy(obs: TermObservations, min_count: int = 6) -> float | None:
    """Binary intention entropy in bits; None below the frequency floor."""
    if min_count < 1:
        raise ValueError("min_count must be >= 1")
    if len(obs.labels) < min_count:
        return None
    counts = Counter(obs.labels)
    total = len(obs.labels)
    entropy = 0.0
    for count in counts.values():
        p = count / total
        if p > 0.0:
            entropy -= p * math.log2(p)
    return entropy


# ---------------------------------------------------------------------------
# Annotated-corpus summary


@dataclass(frozen=True)
class CorpusSummary:
    total_sentences: int = 0
    sentences_with_misspelling: int = 0
    misspelling_occurrences: int = 0
    unique_types: int = 0
    percent_with_misspelling: float = 0.0
    intentional_types: int = 0
    unintentional_types: int = 0
    class_distribution: dict[str, int] = field(default_factory=dict)
    top_intentional: list[tuple[str, int]] = field(default_factory=list)
    top_unintentional: list[tuple[str, int]] = field(default_factory=list)

    def to_json_dict(self) -> dict:
        return {
            "total_sentences": self.total_sentences,
            "sentences_with_misspelling": self.sentences_with_misspelling,
            "misspelling_occurrences": self.misspelling_occurrences,
            "unique_types": self.unique_types,
            "percent_with_misspelling": self.percent_with_misspelling,
            "intentional_types": self.intentional_types,
            "unintentional_types": self.unintentional_types,
            "class_distribution": self.class_distribution,
            "top_intentional": [list(t) for t in self.top_intentional],
            "top_unintentional": [list(t) for t in self.top_unintentional],
        }


def _parse_span(obj: dict, text: str, lineno: int) -> tuple[str, Intention]:
    try:
        start, end = int(obj["start"]), int(obj["end"])
        intention = Intention(obj["intention"])
    except (KeyError, TypeError, ValueError) as exc:
        raise AnnotationFormatError(f"line {lineno}: bad span: {exc}") from None
    if not (0 <= start < end <= len(text)):
        raise AnnotationFormatError(
            f"line {lineno}: span [{start},{end}) outside text of length {len(text)}"
        )
    return text[start:end], intention


def corpus_summary(lines: Iterable[str], top_k: int = 5) -> CorpusSummary:
    """Summarize an annotated corpus (JSONL with ``misspellings`` spans).

    The class distribution covers sentences with at least one
    misspelling, mirroring how such corpora are usually reported.
    """
    total = 0
    with_misp = 0
    occurrences = 0
    term_counts: Counter[str] = Counter()
    term_by_intention: dict[Intention, Counter[str]] = {
        Intention.INTENTIONAL: Counter(),
        Intention.UNINTENTIONAL: Counter(),
    }
    class_distribution: Counter[str] = Counter()
    for lineno, raw in enumerate(lines, start=1):
        if not raw.strip():
            continue
        try:
            obj = json.loads(raw)
        except json.JSONDecodeError as exc:
            raise AnnotationFormatError(f"line {lineno}: invalid JSON: {exc}") from None
        text = obj.get("text", "")
        spans = obj.get("misspellings", [])
        if not isinstance(spans, list):
            raise AnnotationFormatError(f"line {lineno}: misspellings must be a list")
        total += 1
        if spans:
            with_misp += 1
            label = obj.get("label")
            if label is not None:
                class_distribution[str(label)] += 1
        for span in spans:
            surface, intention = _parse_span(span, text, lineno)
            occurrences += 1
            term_counts[surface] += 1
            term_by_intention[intention][surface] += 1

    def top(counter: Counter[str]) -> list[tuple[str, int]]:
        return sorted(counter.items(), key=lambda kv: (-kv[1], kv[0]))[:top_k]

    return CorpusSummary(
        total_sentences=total,
        sentences_with_misspelling=with_misp,
        misspelling_occurrences=occurrences,
        unique_types=len(term_counts),
        percent_with_misspelling=(100.0 * with_misp / total) if total else 0.0,
        intentional_types=len(term_by_intention[Intention.INTENTIONAL]),
        unintentional_types=len(term_by_intention[Intention.UNINTENTIONAL]),
        class_distribution=dict(class_distribution),
        top_intentional=top(term_by_intention[Intention.INTENTIONAL]),
        top_unintentional=top(term_by_intention[Intention.UNINTENTIONAL]),
    )


def collect_term_observations(lines: Iterable[str]) -> dict[str, TermObservations]:
    """Per-term intention labels gathered from corpus misspelling spans."""
    labels: dict[str, list[Intention]] = defaultdict(list)
    for lineno, raw in enumerate(lines, start=1):
        if not raw.strip():
            continue
        try:
            obj = json.loads(raw)
        except json.JSONDecodeError as exc:
            raise AnnotationFormatError(f"line {lineno}: invalid JSON: {exc}") from None
        text = obj.get("text", "")
        for span in obj.get("misspellings", []):
            surface, intention = _parse_span(span, text, lineno)
            labels[surface].append(intention)
    return {
        term: TermObservations(term=term, labels=tuple(obs))
        for term, obs in labels.items()
    }


def entropy_table(
    observations: dict[str, TermObservations], min_count: int = 6
) -> dict[str, float]:
    """Entropy per term, restricted to terms at or above the floor."""
    table: dict[str, float] = {}
    for term in sorted(observations):
        entropy = label_entropy(observations[term], min_count=min_count)
        if entropy is not None:
            table[term] = entropy
    return table
