"""Corpus JSONL reading and writing.

One object per line: ``text`` (string), optional ``label``
(negative|neutral|positive), optional ``tokens`` (pre-tokenized array).
When ``tokens`` is present segmentation is skipped.
"""

from __future__ import annotations

import json
from typing import Iterable, Iterator

from .lexicon import Lexicon
from .segmenter import Sentiment, TokenizedSentence, segment


class CorpusFormatError(ValueError):
    """Raised for malformed corpus lines."""


def parse_label(value: object, lineno: int) -> Sentiment | None:
    if value is None:
        return None
    try:
        return Sentiment(value)
    except ValueError:
        raise CorpusFormatError(f"line {lineno}: unknown label {value!r}") from None


def read_corpus(
    lines: Iterable[str], lex: Lexicon | None = None
) -> Iterator[TokenizedSentence]:
    """Yield sentences; raw-text lines need a lexicon to segment with."""
    for lineno, raw in enumerate(lines, start=1):
        if not raw.strip():
            continue
        try:
            obj = json.loads(raw)
        except json.JSONDecodeError as exc:
            raise CorpusFormatError(f"line {lineno}: invalid JSON: {exc}") from None
        if not isinstance(obj, dict):
            raise CorpusFormatError(f"line {lineno}: expected an object")
        label = parse_label(obj.get("label"), lineno)
        tokens = obj.get("tokens")
        if tokens is not None:
            if not isinstance(tokens, list) or not all(
                isinstance(t, str) and t for t in tokens
            ):
                raise CorpusFormatError(
                    f"line {lineno}: tokens must be non-empty strings"
                )
            yield TokenizedSentence(tokens=tuple(tokens), label=label)
            continue
        text = obj.get("text")
        if not isinstance(text, str):
            raise CorpusFormatError(f"line {lineno}: missing text or tokens")
        if lex is None:
            raise CorpusFormatError(
                f"line {lineno}: raw text requires a lexicon for segmentation"
            )
        yield segment(text, lex, label=label)


def sentence_to_dict(sentence: TokenizedSentence) -> dict:
    out: dict = {"tokens": list(sentence.tokens)}
    if sentence.label is not None:
        out["label"] = sentence.label.value
    text = sentence.text
    if text is not None:
        out["text"] = text
    return out


def dump_jsonl_line(obj: dict) -> str:
    return json.dumps(obj, ensure_ascii=False, sort_keys=True, separators=(",", ":"))
