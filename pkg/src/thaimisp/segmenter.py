"""Dictionary word segmentation for unspaced Thai text.

Greedy longest-match over the combined vocabulary (wordlist plus
misspelt surfaces).  Deterministic and dependency-free, which matters
more at this scale than reproducing any particular neural tokenizer's
boundaries.  Matching walks grapheme clusters, so a combining mark is
never split from its base character.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .lexicon import Lexicon
from .script import grapheme_clusters


class Sentiment(Enum):
    NEGATIVE = "negative"
    NEUTRAL = "neutral"
    POSITIVE = "positive"


@dataclass(frozen=True)
class TokenizedSentence:
    """Word tokens w_1..w_N with an optional gold sentiment label.

    ``joiners`` holds the whitespace around tokens (len(tokens) + 1
    slots: before the first token, between tokens, after the last), so
    the original text can be reconstructed.  Pre-tokenized input has no
    whitespace record and leaves it None.
    """

    tokens: tuple[str, ...]
    label: Sentiment | None = None
    joiners: tuple[str, ...] | None = None

    def __post_init__(self) -> None:
        if any(not t for t in self.tokens):
            raise ValueError("tokens must be non-empty strings")
        if self.joiners is not None and len(self.joiners) != len(self.tokens) + 1:
            raise ValueError("joiners must have len(tokens) + 1 elements")

    def __len__(self) -> int:
        return len(self.tokens)

    @property
    def text(self) -> str | None:
        """Original text, when whitespace was recorded at segmentation."""
        if self.joiners is None:
            return None
        parts = [self.joiners[0]]
        for token, joiner in zip(self.tokens, self.joiners[1:]):
            parts.append(token)
            parts.append(joiner)
        return "".join(parts)

    def with_tokens(self, tokens: tuple[str, ...]) -> "TokenizedSentence":
        """Same label, new token sequence (whitespace record dropped)."""
        return TokenizedSentence(tokens=tokens, label=self.label)


def _segment_chunk(clusters: list[str], lex: Lexicon) -> list[str]:
    """Longest-match one whitespace-free chunk; OOV runs become one token."""
    vocab = lex.vocabulary
    max_k = lex.max_match_clusters
    tokens: list[str] = []
    oov: list[str] = []
    i = 0
    n = len(clusters)
    while i < n:
        match = None
        for k in range(min(max_k, n - i), 0, -1):
            candidate = "".join(clusters[i : i + k])
            if candidate in vocab:
                match = candidate
                i += k
                break
        if match is None:
            oov.append(clusters[i])
            i += 1
        else:
            if oov:
                tokens.append("".join(oov))
                oov = []
            tokens.append(match)
    if oov:
        tokens.append("".join(oov))
    return tokens


def segment(text: str, lex: Lexicon, label: Sentiment | None = None) -> TokenizedSentence:
    """Split text into word tokens. Whitespace always breaks and is recorded."""
    tokens: list[str] = []
    joiners: list[str] = [""]
    chunk: list[str] = []

    def flush_chunk() -> None:
        if not chunk:
            return
        for token in _segment_chunk(grapheme_clusters("".join(chunk)), lex):
            tokens.append(token)
            joiners.append("")
        chunk.clear()

    for ch in text:
        if ch.isspace():
            flush_chunk()
            joiners[-1] += ch
        else:
            chunk.append(ch)
    flush_chunk()

    return TokenizedSentence(tokens=tuple(tokens), label=label, joiners=tuple(joiners))
