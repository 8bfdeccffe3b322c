"""Misspelling dictionary and standard wordlist.

The lexicon is the dictionary-based detection/correction resource: each
entry maps a misspelt surface form to its corrected form plus the
annotated intention and (optionally) the misspelling pattern.  Lookup is
exact and context-free, so context-dependent pairs such as คะ/ค่ะ are
flagged wherever they occur.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path

from .script import grapheme_clusters


class Intention(Enum):
    INTENTIONAL = "intentional"
    UNINTENTIONAL = "unintentional"


class PatternLabel(Enum):
    CHARACTER_REPETITION = "character_repetition"
    VOWEL_SUBSTITUTION = "vowel_substitution"
    TONE_MODIFICATION = "tone_modification"
    CONSONANT_DEVIATION = "consonant_deviation"
    OTHERS = "others"
    SIMPLIFYING = "simplifying"
    AD_HOC_ABBREVIATION = "ad_hoc_abbreviation"
    TONE_CONFUSION = "tone_confusion"
    CONSONANT_CONFUSION = "consonant_confusion"
    TYPO = "typo"
    UNLABELED = "unlabeled"


class LexiconError(ValueError):
    """Raised when a lexicon or wordlist file fails validation."""


@dataclass(frozen=True)
class LexiconEntry:
    misspelt: str
    corrected: str
    intention: Intention
    pattern: PatternLabel = PatternLabel.UNLABELED

    def __post_init__(self) -> None:
        if not self.misspelt:
            raise LexiconError("misspelt form is empty")
        if any(c.isspace() for c in self.misspelt):
            raise LexiconError(f"misspelt form contains whitespace: {self.misspelt!r}")
        if self.misspelt == self.corrected:
            raise LexiconError(f"misspelt equals corrected: {self.misspelt!r}")


@dataclass(frozen=True)
class Lexicon:
    """Immutable after construction; safe to share across threads."""

    entries: dict[str, LexiconEntry]
    wordlist: frozenset[str]
    _vocabulary: frozenset[str] = field(init=False, repr=False)
    _max_match_clusters: int = field(init=False, repr=False)

    def __post_init__(self) -> None:
        vocab = frozenset(self.wordlist | set(self.entries))
        object.__setattr__(self, "_vocabulary", vocab)
        max_len = max((len(grapheme_clusters(w)) for w in vocab), default=0)
        object.__setattr__(self, "_max_match_clusters", max_len)

    def lookup(self, surface: str) -> LexiconEntry | None:
        return self.entries.get(surface)

    def in_wordlist(self, word: str) -> bool:
        return word in self.wordlist

    @property
    def vocabulary(self) -> frozenset[str]:
        """Wordlist plus misspelt surfaces; the segmentation vocabulary."""
        return self._vocabulary

    @property
    def max_match_clusters(self) -> int:
        return self._max_match_clusters


def lookup(lex: Lexicon, surface: str) -> LexiconEntry | None:
    return lex.lookup(surface)


def parse_wordlist_lines(lines) -> frozenset[str]:
    """One word per line; blank lines and '#' comment lines are ignored."""
    words = set()
    for line in lines:
        word = line.strip()
        if not word or word.startswith("#"):
            continue
        words.add(word)
    return frozenset(words)


def load_wordlist(path: str | Path) -> frozenset[str]:
    with open(path, encoding="utf-8") as fh:
        return parse_wordlist_lines(fh)


def parse_lexicon_rows(
    rows: list[str], wordlist: frozenset[str], source: str = "<lexicon>"
) -> Lexicon:
    entries: dict[str, LexiconEntry] = {}
    for lineno, raw in enumerate(rows, start=1):
        line = raw.rstrip("\n")
        if not line.strip() or line.startswith("#"):
            continue
        cols = line.split("\t")
        # Pattern column is optional so minimal dictionaries still load.
        if len(cols) == 3:
            cols.append(PatternLabel.UNLABELED.value)
        if len(cols) != 4:
            raise LexiconError(
                f"{source}:{lineno}: expected 3 or 4 tab-separated columns, got {len(cols)}"
            )
        misspelt, corrected, intention_s, pattern_s = (c.strip() for c in cols)
        try:
            intention = Intention(intention_s)
        except ValueError:
            raise LexiconError(
                f"{source}:{lineno}: unknown intention {intention_s!r}"
            ) from None
        try:
            pattern = PatternLabel(pattern_s)
        except ValueError:
            raise LexiconError(
                f"{source}:{lineno}: unknown pattern {pattern_s!r}"
            ) from None
        if misspelt in entries:
            raise LexiconError(
                f"{source}:{lineno}: duplicate misspelt key {misspelt!r}"
            )
        if corrected not in wordlist:
            raise LexiconError(
                f"{source}:{lineno}: corrected form {corrected!r} not in wordlist"
            )
        try:
            entries[misspelt] = LexiconEntry(misspelt, corrected, intention, pattern)
        except LexiconError as exc:
            raise LexiconError(f"{source}:{lineno}: {exc}") from None
    return Lexicon(entries=entries, wordlist=wordlist)


def load_lexicon(lexicon_path: str | Path, wordlist_path: str | Path) -> Lexicon:
    """Load and validate the TSV lexicon against the wordlist.

    Row format: misspelt<TAB>corrected<TAB>intention[<TAB>pattern].
    """
    wordlist = load_wordlist(wordlist_path)
    with open(lexicon_path, encoding="utf-8") as fh:
        rows = fh.readlines()
    return parse_lexicon_rows(rows, wordlist, source=str(lexicon_path))
