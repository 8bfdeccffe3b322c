"""Thai character classification and grapheme clustering.

Every rule engine in this package works on "clusters": a base character
plus the combining marks written on it (above/below vowels, tone marks,
thanthakhat).  Leading and following vowels are spacing characters in
Thai and stay clusters of their own, which keeps visible character runs
(the raw material of repetition analysis) one cluster per glyph.
"""

from __future__ import annotations

import unicodedata
from enum import Enum


class CharClass(Enum):
    CONSONANT = "consonant"
    VOWEL_LEADING = "vowel_leading"
    VOWEL_FOLLOWING = "vowel_following"
    VOWEL_ABOVE = "vowel_above"
    VOWEL_BELOW = "vowel_below"
    TONE_MARK = "tone_mark"
    THANTHAKHAT_MARK = "thanthakhat_mark"
    REPETITION_MARK = "repetition_mark"
    DIGIT = "digit"
    OTHER = "other"


TONE_MARKS = frozenset("่้๊๋")  # ่ ้ ๊ ๋
THANTHAKHAT = "์"  # ์
REPETITION_MARK = "ๆ"  # ๆ

_LEADING_VOWELS = frozenset("เแโใไ")  # เ แ โ ใ ไ
_FOLLOWING_VOWELS = frozenset("ะาำๅ")  # ะ า ำ ๅ
_ABOVE_VOWELS = frozenset(
    "ัิีึื็ํ๎"
)  # ั ิ ี ึ ื ็ ํ ๎
_BELOW_VOWELS = frozenset("ฺุู")  # ุ ู ฺ

# Classes that attach to the preceding base character.
_COMBINING = frozenset(
    {
        CharClass.VOWEL_ABOVE,
        CharClass.VOWEL_BELOW,
        CharClass.TONE_MARK,
        CharClass.THANTHAKHAT_MARK,
    }
)


def classify_char(ch: str) -> CharClass:
    """Classify a single Unicode scalar. Total: unknown input is OTHER."""
    if len(ch) != 1:
        raise ValueError(f"expected a single character, got {ch!r}")
    if "ก" <= ch <= "ฮ":
        return CharClass.CONSONANT
    if ch in _LEADING_VOWELS:
        return CharClass.VOWEL_LEADING
    if ch in _FOLLOWING_VOWELS:
        return CharClass.VOWEL_FOLLOWING
    if ch in _ABOVE_VOWELS:
        return CharClass.VOWEL_ABOVE
    if ch in _BELOW_VOWELS:
        return CharClass.VOWEL_BELOW
    if ch in TONE_MARKS:
        return CharClass.TONE_MARK
    if ch == THANTHAKHAT:
        return CharClass.THANTHAKHAT_MARK
    if ch == REPETITION_MARK:
        return CharClass.REPETITION_MARK
    if unicodedata.category(ch) == "Nd":
        return CharClass.DIGIT
    return CharClass.OTHER


def is_combining(ch: str) -> bool:
    return classify_char(ch) in _COMBINING


def grapheme_clusters(text: str) -> list[str]:
    """Split text into clusters; joining the result reproduces the input.

    Combining marks attach to the preceding cluster.  A cluster takes at
    most one tone mark; a second consecutive tone mark opens a new
    cluster.  A combining mark with nothing before it becomes a cluster
    of its own.
    """
    clusters: list[str] = []
    cluster_has_tone = False
    for ch in text:
        kind = classify_char(ch)
        if kind in _COMBINING and clusters:
            if kind is CharClass.TONE_MARK:
                if cluster_has_tone:
                    clusters.append(ch)
                    continue
                cluster_has_tone = True
            clusters[-1] += ch
        else:
            clusters.append(ch)
            cluster_has_tone = kind is CharClass.TONE_MARK
    return clusters


def cluster_base(cluster: str) -> str | None:
    """The non-combining character of a cluster, or None for mark-only clusters."""
    for ch in cluster:
        if not is_combining(ch):
            return ch
    return None


def strip_tone_marks(text: str) -> str:
    return "".join(ch for ch in text if ch not in TONE_MARKS)


def tone_mark_sequence(text: str) -> str:
    return "".join(ch for ch in text if ch in TONE_MARKS)
