"""Misspelling detection (tag case function) and dictionary correction.

Detection walks the cases in a fixed order, first match wins:

    <lol>  a run of '5' of length >= 3
    <rep>  any other cluster run of length >= 3, or a ๆ run of length >= 2
    <int>  lexicon hit annotated intentional
    <msp>  lexicon hit annotated unintentional
    NULL   otherwise

Runs are counted anywhere in the token, not only at the end: repetition
shows up on vowels and final consonants alike.  The thresholds (3 for
ordinary clusters and '5', 2 for ๆ) reflect that Thai words legitimately
contain doubled letters while any doubled ๆ is nonstandard.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .lexicon import Intention, Lexicon
from .script import REPETITION_MARK, grapheme_clusters


class MispTag(Enum):
    LOL = "<lol>"
    REP = "<rep>"
    INT = "<int>"
    MSP = "<msp>"
    NULL = None

    @property
    def surface(self) -> str | None:
        """Token realization; NULL has none and is never emitted."""
        return self.value


LOL_RUN_MIN = 3
REP_RUN_MIN = 3
REPEAT_MARK_RUN_MIN = 2


@dataclass(frozen=True)
class RunAnalysis:
    collapsed: str
    max_run_char: str
    max_run_len: int
    runs: tuple[tuple[str, int], ...]


def collapse_runs(token: str) -> RunAnalysis:
    """Reduce every maximal run of identical clusters to one occurrence."""
    if not token:
        raise ValueError("cannot analyse an empty token")
    clusters = grapheme_clusters(token)
    runs: list[tuple[str, int]] = []
    for cluster in clusters:
        if runs and runs[-1][0] == cluster:
            runs[-1] = (cluster, runs[-1][1] + 1)
        else:
            runs.append((cluster, 1))
    best = max(runs, key=lambda r: r[1])
    return RunAnalysis(
        collapsed="".join(c for c, _ in runs),
        max_run_char=best[0],
        max_run_len=best[1],
        runs=tuple(runs),
    )


def detect(token: str, lex: Lexicon) -> MispTag:
    """Tag a token; see the case order in the module docstring."""
    if not token:
        return MispTag.NULL
    analysis = collapse_runs(token)
    if any(c == "5" and n >= LOL_RUN_MIN for c, n in analysis.runs):
        return MispTag.LOL
    for cluster, n in analysis.runs:
        if cluster == "5":
            continue
        if n >= REP_RUN_MIN:
            return MispTag.REP
        if cluster == REPETITION_MARK and n >= REPEAT_MARK_RUN_MIN:
            return MispTag.REP
    entry = lex.lookup(token)
    if entry is not None:
        if entry.intention is Intention.INTENTIONAL:
            return MispTag.INT
        return MispTag.MSP
    return MispTag.NULL


def correct(token: str, lex: Lexicon) -> str:
    """Dictionary correction; unknown tokens pass through unchanged.

    Lexicon hits win; otherwise a token whose run-collapsed form is
    known (wordlist or lexicon) is corrected through that form.
    """
    if not token:
        return token
    entry = lex.lookup(token)
    if entry is not None:
        return entry.corrected
    collapsed = collapse_runs(token).collapsed
    if collapsed != token and (
        lex.in_wordlist(collapsed) or lex.lookup(collapsed) is not None
    ):
        return correct(collapsed, lex)
    return token
