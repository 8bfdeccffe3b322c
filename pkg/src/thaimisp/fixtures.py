"""Bundled starter data: a curated dictionary and pattern-pair fixtures.

The shipped lexicon covers the frequent Thai social-media misspellings
used throughout the test suite; real deployments should supply larger
dictionaries in the same TSV format.
"""

from __future__ import annotations

from importlib import resources

from .lexicon import (
    Intention,
    Lexicon,
    PatternLabel,
    parse_lexicon_rows,
    parse_wordlist_lines,
)


def _data_text(name: str) -> str:
    return resources.files(__package__).joinpath("data").joinpath(name).read_text(
        encoding="utf-8"
    )


def fixture_wordlist() -> frozenset[str]:
    return parse_wordlist_lines(_data_text("wordlist.txt").splitlines())


def fixture_lexicon() -> Lexicon:
    rows = _data_text("lexicon.tsv").splitlines()
    return parse_lexicon_rows(rows, fixture_wordlist(), source="data/lexicon.tsv")


def pattern_pairs() -> list[tuple[str, str, Intention, PatternLabel]]:
    """(misspelt, corrected, intention, annotated pattern) rows."""
    pairs = []
    for line in _data_text("pattern_pairs.tsv").splitlines():
        if not line.strip() or line.startswith("#"):
            continue
        misspelt, corrected, intention, pattern = line.split("\t")
        pairs.append(
            (misspelt, corrected, Intention(intention), PatternLabel(pattern))
        )
    return pairs
