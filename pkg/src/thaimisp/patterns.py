"""Rule-based classification of (misspelt, corrected) pairs.

Each rule explains one way Thai social-media writers deform a word;
the first rule that accounts for the whole edit wins.  Pairs mixing
several deformations fall through to OTHERS (intentional) or TYPO
(unintentional): no single transformation describes them.

Intention is an input, not inferred; it comes from human annotation.
"""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass
from typing import Callable

from .detector import REPEAT_MARK_RUN_MIN, collapse_runs
from .lexicon import Intention, PatternLabel
from .script import (
    REPETITION_MARK,
    CharClass,
    classify_char,
    cluster_base,
    grapheme_clusters,
    strip_tone_marks,
    tone_mark_sequence,
)

# ---------------------------------------------------------------------------
# Cluster-level edit script

_MATCH = "match"
_SUB = "sub"
_INS = "ins"
_DEL = "del"


@dataclass(frozen=True)
class ClusterDiff:
    """Edit script turning the corrected form into the misspelt form.

    substitutions are (corrected_cluster, misspelt_cluster) pairs;
    insertions are clusters added to reach the misspelt form; deletions
    are corrected clusters that the misspelt form dropped.  ``ops`` is
    the full script in order: (op, corrected_cluster, misspelt_cluster).
    """

    substitutions: tuple[tuple[str, str], ...]
    insertions: tuple[str, ...]
    deletions: tuple[str, ...]
    ops: tuple[tuple[str, str | None, str | None], ...]

    def apply_to_corrected(self) -> str:
        return "".join(b for _, _, b in self.ops if b is not None)


def cluster_diff(misspelt: str, corrected: str) -> ClusterDiff:
    """Minimal edit script over grapheme clusters, unit costs.

    Ties prefer substitution over an insert+delete pair; among the
    remaining ties insertion is preferred over deletion, which makes the
    backtrace deterministic.
    """
    if not misspelt or not corrected:
        raise ValueError("cluster_diff requires non-empty strings")
    a = grapheme_clusters(corrected)
    b = grapheme_clusters(misspelt)
    n, m = len(a), len(b)
    dp = [[0] * (m + 1) for _ in range(n + 1)]
    for i in range(n + 1):
        dp[i][0] = i
    for j in range(m + 1):
        dp[0][j] = j
    for i in range(1, n + 1):
        for j in range(1, m + 1):
            cost = 0 if a[i - 1] == b[j - 1] else 1
            dp[i][j] = min(
                dp[i - 1][j - 1] + cost, dp[i][j - 1] + 1, dp[i - 1][j] + 1
            )
    ops: list[tuple[str, str | None, str | None]] = []
    i, j = n, m
    while i > 0 or j > 0:
        if i > 0 and j > 0 and dp[i][j] == dp[i - 1][j - 1] + (
            0 if a[i - 1] == b[j - 1] else 1
        ):
            op = _MATCH if a[i - 1] == b[j - 1] else _SUB
            ops.append((op, a[i - 1], b[j - 1]))
            i, j = i - 1, j - 1
        elif j > 0 and dp[i][j] == dp[i][j - 1] + 1:
            ops.append((_INS, None, b[j - 1]))
            j -= 1
        else:
            ops.append((_DEL, a[i - 1], None))
            i -= 1
    ops.reverse()
    return ClusterDiff(
        substitutions=tuple((x, y) for op, x, y in ops if op == _SUB),  # type: ignore[misc]
        insertions=tuple(y for op, _, y in ops if op == _INS),  # type: ignore[misc]
        deletions=tuple(x for op, x, _ in ops if op == _DEL),  # type: ignore[misc]
        ops=tuple(ops),
    )


# ---------------------------------------------------------------------------
# Vowel equivalences

_C = "[ก-ฮ]"

# One-way rewrites; listed in both directions where the inverse has an
# unambiguous insertion point.  Two strings are "vowel-connected" when a
# bounded search over these rewrites links them.  The table holds the
# short<->long monophthong pairs plus the inherent-consonant spellings
# (อำ/อัม/อรรม, ไอ/ใอ/อัย) and the เ-ิ/-ึ pair seen in stretched forms.
_VOWEL_REWRITES: tuple[tuple[re.Pattern[str], str], ...] = tuple(
    (re.compile(p), r)
    for p, r in [
        ("ะ", "า"),  # ะ -> า
        ("า", "ะ"),  # า -> ะ
        ("ั", "า"),  # ั -> า (closed-syllable short a)
        ("า", "ั"),  # า -> ั
        ("ิ", "ี"),  # ิ -> ี
        ("ี", "ิ"),  # ี -> ิ
        ("ึ", "ื"),  # ึ -> ื
        ("ื", "ึ"),  # ื -> ึ
        ("ุ", "ู"),  # ุ -> ู
        ("ู", "ุ"),  # ู -> ุ
        ("็", ""),  # ็ dropped when lengthening
        (rf"(เ|แ|โ)({_C})ะ", r"\1\2"),  # เ-ะ/แ-ะ/โ-ะ -> long form
        (rf"เ({_C})าะ", r"\1อ"),
        (rf"({_C})อ", r"เ\1าะ"),
        (rf"เ({_C})ิ", r"\1ึ"),  # เ-ิ -> -ึ
        (rf"({_C})ึ", r"เ\1ิ"),
        (rf"({_C})ำ", r"\1ัม"),  # -ำ -> -ัม
        (rf"({_C})ัม", r"\1ำ"),
        (rf"({_C})ำ", r"\1รรม"),  # -ำ -> -รรม
        (rf"({_C})รรม", r"\1ำ"),
        (rf"ไ({_C})", r"\1ัย"),  # ไ- -> -ัย
        (rf"({_C})ัย", r"ไ\1"),
        (rf"ใ({_C})", r"\1ัย"),  # ใ- -> -ัย
        (rf"({_C})ัย", r"ใ\1"),
    ]
)

_SEARCH_DEPTH = 3
_SEARCH_CAP = 4000


def _rewrite_neighbors(s: str) -> list[str]:
    out = []
    for pattern, repl in _VOWEL_REWRITES:
        for m in pattern.finditer(s):
            out.append(s[: m.start()] + m.expand(repl) + s[m.end() :])
    return out


def vowel_connected(a: str, b: str) -> bool:
    """True when a is reachable from b (or equal) via the vowel table."""
    if a == b:
        return True
    seen = {a}
    frontier = deque([(a, 0)])
    while frontier:
        current, depth = frontier.popleft()
        if depth == _SEARCH_DEPTH:
            continue
        for neighbor in _rewrite_neighbors(current):
            if neighbor == b:
                return True
            if neighbor not in seen:
                seen.add(neighbor)
                if len(seen) > _SEARCH_CAP:
                    return False
                frontier.append((neighbor, depth + 1))
    return False


# ---------------------------------------------------------------------------
# Cluster helpers for the rules

_LONG_TO_SHORT = {"ี": "ิ", "ื": "ึ", "ู": "ุ"}


def _is_consonant_cluster(cluster: str) -> bool:
    base = cluster_base(cluster)
    return base is not None and classify_char(base) is CharClass.CONSONANT


def _cluster_marks(cluster: str) -> str:
    base = cluster_base(cluster)
    if base is None:
        return cluster
    return cluster.replace(base, "", 1)


def _is_pure_consonant(cluster: str) -> bool:
    """A bare consonant, optionally silenced with thanthakhat."""
    if not _is_consonant_cluster(cluster):
        return False
    marks = _cluster_marks(cluster)
    return all(
        classify_char(ch) is CharClass.THANTHAKHAT_MARK for ch in marks
    )


def _length_normalized(cluster: str) -> str:
    """Cluster with tone marks stripped and vowel length canonicalized."""
    out = []
    for ch in cluster:
        kind = classify_char(ch)
        if kind is CharClass.TONE_MARK:
            continue
        if ch == "็":  # ็ marks shortness only
            continue
        out.append(_LONG_TO_SHORT.get(ch, ch))
    return "".join(out)


def _consonant_skeleton(s: str) -> list[str]:
    return [
        _length_normalized(cl)
        for cl in grapheme_clusters(s)
        if _is_consonant_cluster(cl)
    ]


def _is_subsequence(needle: list[str], haystack: list[str]) -> bool:
    it = iter(haystack)
    return all(any(x == y for y in it) for x in needle)


def _strip_repetition(token: str) -> str:
    """Collapse cluster runs; nonstandard ๆ runs vanish entirely."""
    parts = []
    for cluster, n in collapse_runs(token).runs:
        if cluster == REPETITION_MARK and n >= REPEAT_MARK_RUN_MIN:
            continue
        parts.append(cluster)
    return "".join(parts)


# ---------------------------------------------------------------------------
# The rules, in priority order

def _rule_repetition(misspelt: str, corrected: str, _: Intention) -> bool:
    if _strip_repetition(misspelt) == corrected:
        return True
    diff = cluster_diff(misspelt, corrected)
    if diff.substitutions or diff.deletions or not diff.insertions:
        return False
    # Every inserted cluster must duplicate a neighbor in the misspelt form.
    for idx, (op, _, b) in enumerate(diff.ops):
        if op != _INS:
            continue
        prev_b = next(
            (x for _, _, x in reversed(diff.ops[:idx]) if x is not None), None
        )
        next_b = next((x for _, _, x in diff.ops[idx + 1 :] if x is not None), None)
        if b != prev_b and b != next_b:
            return False
    return True


def _rule_tone(misspelt: str, corrected: str, _: Intention) -> bool:
    # A tone edit may ride along with a table vowel-length change
    # (both do in น๊าคร๊าบ -> นะครับ), but nothing else may change.
    sm, sc = strip_tone_marks(misspelt), strip_tone_marks(corrected)
    if sm == sc:
        return True
    if tone_mark_sequence(misspelt) == tone_mark_sequence(corrected):
        return False
    return vowel_connected(sm, sc)


def _rule_vowel(misspelt: str, corrected: str, _: Intention) -> bool:
    return vowel_connected(misspelt, corrected)


def _rule_consonant(misspelt: str, corrected: str, _: Intention) -> bool:
    diff = cluster_diff(misspelt, corrected)
    for a, b in diff.substitutions:
        if not (_is_consonant_cluster(a) and _is_consonant_cluster(b)):
            return False
        if _cluster_marks(a) != _cluster_marks(b):
            return False
    for cluster in diff.insertions + diff.deletions:
        if not _is_pure_consonant(cluster):
            return False
    return True


def _rule_simplifying(misspelt: str, corrected: str, _: Intention) -> bool:
    if len(corrected) <= len(misspelt):
        return False
    return _is_subsequence(
        _consonant_skeleton(misspelt), _consonant_skeleton(corrected)
    )


def _rule_abbreviation(misspelt: str, corrected: str, _: Intention) -> bool:
    if 2 * len(misspelt) > len(corrected):
        return False
    bases_m = [cluster_base(cl) or cl for cl in grapheme_clusters(misspelt)]
    bases_c = [cluster_base(cl) or cl for cl in grapheme_clusters(corrected)]
    return _is_subsequence(bases_m, bases_c)


def _rule_typo(_: str, __: str, intention: Intention) -> bool:
    return intention is Intention.UNINTENTIONAL


def _by_intention(
    intentional: PatternLabel, unintentional: PatternLabel
) -> Callable[[Intention], PatternLabel]:
    return lambda i: intentional if i is Intention.INTENTIONAL else unintentional


def _always(label: PatternLabel) -> Callable[[Intention], PatternLabel]:
    return lambda _: label


@dataclass(frozen=True)
class PatternRule:
    name: str
    matches: Callable[[str, str, Intention], bool]
    label: Callable[[Intention], PatternLabel]


PATTERN_RULES: tuple[PatternRule, ...] = (
    PatternRule(
        "repetition", _rule_repetition, _always(PatternLabel.CHARACTER_REPETITION)
    ),
    PatternRule(
        "tone",
        _rule_tone,
        _by_intention(PatternLabel.TONE_MODIFICATION, PatternLabel.TONE_CONFUSION),
    ),
    PatternRule("vowel", _rule_vowel, _always(PatternLabel.VOWEL_SUBSTITUTION)),
    PatternRule(
        "consonant",
        _rule_consonant,
        _by_intention(
            PatternLabel.CONSONANT_DEVIATION, PatternLabel.CONSONANT_CONFUSION
        ),
    ),
    PatternRule("simplifying", _rule_simplifying, _always(PatternLabel.SIMPLIFYING)),
    PatternRule(
        "abbreviation", _rule_abbreviation, _always(PatternLabel.AD_HOC_ABBREVIATION)
    ),
    PatternRule("typo", _rule_typo, _always(PatternLabel.TYPO)),
)


def _classify(
    misspelt: str,
    corrected: str,
    intention: Intention,
    rules: tuple[PatternRule, ...],
) -> tuple[PatternLabel, str]:
    if misspelt == corrected:
        raise ValueError(f"{misspelt!r} is not a misspelling of itself")
    if not misspelt or not corrected:
        raise ValueError("misspelt and corrected must be non-empty")
    for rule in rules:
        if rule.matches(misspelt, corrected, intention):
            return rule.label(intention), rule.name
    return PatternLabel.OTHERS, "others"


def classify_pattern(
    misspelt: str, corrected: str, intention: Intention
) -> PatternLabel:
    """Name the pattern behind a known misspelling pair."""
    return _classify(misspelt, corrected, intention, PATTERN_RULES)[0]


def classify_pattern_trace(
    misspelt: str, corrected: str, intention: Intention
) -> tuple[PatternLabel, str]:
    """classify_pattern plus the name of the rule that fired."""
    return _classify(misspelt, corrected, intention, PATTERN_RULES)
