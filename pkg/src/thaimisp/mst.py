"""Misspelling tag insertion: the sentence transform producing s*.

Each token is followed by the surface form of its detection tag; tokens
that detect as NULL contribute no tag (NULL has no token realization).
Tag surfaces are reserved words: annotating a sentence that already
contains one would make the output ambiguous, so that is an error.
"""

from __future__ import annotations

from dataclasses import dataclass

from .detector import MispTag, detect
from .lexicon import Lexicon
from .segmenter import TokenizedSentence

TAG_SURFACES = frozenset(
    tag.surface for tag in MispTag if tag.surface is not None
)


class ReservedTokenError(ValueError):
    """An input token collides with a tag surface form."""


@dataclass(frozen=True)
class AugmentedSentence:
    tokens: tuple[str, ...]
    tag_counts: dict[MispTag, int]
    label: object = None

    @property
    def total_tags(self) -> int:
        return sum(self.tag_counts.values())


def annotate(sentence: TokenizedSentence, lex: Lexicon) -> AugmentedSentence:
    """Interleave detection tags after misspelt tokens."""
    out: list[str] = []
    counts = {tag: 0 for tag in MispTag if tag is not MispTag.NULL}
    for token in sentence.tokens:
        if token in TAG_SURFACES:
            raise ReservedTokenError(
                f"input token {token!r} is a reserved tag surface"
            )
        out.append(token)
        tag = detect(token, lex)
        if tag is not MispTag.NULL:
            out.append(tag.surface)  # type: ignore[arg-type]
            counts[tag] += 1
    return AugmentedSentence(
        tokens=tuple(out), tag_counts=counts, label=sentence.label
    )


def strip_tags(tokens: tuple[str, ...] | list[str]) -> tuple[str, ...]:
    """Remove tag tokens, recovering the original token sequence."""
    return tuple(t for t in tokens if t not in TAG_SURFACES)
