"""Word-vector table and misspelling-averaged token embeddings.

A token's averaged representation is the componentwise mean of its own
vector and its corrected form's vector.  Tokens the lexicon does not
correct keep their vector exactly.  Out-of-vocabulary tokens embed as
the zero vector (with a flag); averaging against zero halves magnitude
on one-sided misses, which is acceptable at this scale and keeps the
average well-defined without subword machinery.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, TextIO

import numpy as np

from .detector import correct
from .lexicon import Lexicon


class EmbeddingFormatError(ValueError):
    """Raised when an embedding text file fails to parse."""


@dataclass(frozen=True)
class EmbeddingStore:
    dim: int
    table: dict[str, np.ndarray]

    def __post_init__(self) -> None:
        if self.dim <= 0:
            raise ValueError("dim must be positive")

    def __contains__(self, word: str) -> bool:
        return word in self.table

    def __len__(self) -> int:
        return len(self.table)


def load_embeddings(path: str | Path) -> EmbeddingStore:
    """Parse the text format: header "<count> <dim>", then one word per line."""
    with open(path, encoding="utf-8") as fh:
        header = fh.readline().split()
        if len(header) != 2:
            raise EmbeddingFormatError(f"{path}:1: header must be '<count> <dim>'")
        try:
            count, dim = int(header[0]), int(header[1])
        except ValueError:
            raise EmbeddingFormatError(
                f"{path}:1: non-integer header fields"
            ) from None
        if dim <= 0 or count < 0:
            raise EmbeddingFormatError(f"{path}:1: invalid count/dim")
        table: dict[str, np.ndarray] = {}
        for lineno, line in enumerate(fh, start=2):
            if not line.strip():
                continue
            parts = line.rstrip("\n").split(" ")
            word, values = parts[0], parts[1:]
            if len(values) != dim:
                raise EmbeddingFormatError(
                    f"{path}:{lineno}: expected {dim} values, got {len(values)}"
                )
            if word in table:
                raise EmbeddingFormatError(f"{path}:{lineno}: duplicate word {word!r}")
            try:
                vector = np.array([float(v) for v in values], dtype=np.float64)
            except ValueError:
                raise EmbeddingFormatError(
                    f"{path}:{lineno}: non-numeric vector component"
                ) from None
            if not np.all(np.isfinite(vector)):
                raise EmbeddingFormatError(
                    f"{path}:{lineno}: non-finite vector component"
                )
            table[word] = vector
    if len(table) != count:
        raise EmbeddingFormatError(
            f"{path}: header declares {count} words, file has {len(table)}"
        )
    return EmbeddingStore(dim=dim, table=table)


def write_embeddings(store: EmbeddingStore, fh: TextIO) -> None:
    fh.write(f"{len(store.table)} {store.dim}\n")
    for word, vector in store.table.items():
        fh.write(word + " " + " ".join(f"{v:.6f}" for v in vector) + "\n")


def generate_embeddings(
    words: Iterable[str], dim: int, seed: int
) -> EmbeddingStore:
    """Deterministic pseudo-random store for fixtures and experiments."""
    rng = np.random.default_rng(seed)
    table: dict[str, np.ndarray] = {}
    for word in words:
        if word in table:
            continue
        table[word] = rng.standard_normal(dim)
    return EmbeddingStore(dim=dim, table=table)


def embed_token(store: EmbeddingStore, token: str) -> tuple[np.ndarray, bool]:
    """Stored vector, or (zero vector, oov=True) for unknown tokens."""
    vector = store.table.get(token)
    if vector is None:
        return np.zeros(store.dim), True
    return vector, False


def mae_vector(store: EmbeddingStore, token: str, lex: Lexicon) -> np.ndarray:
    """Mean of the token's vector and its corrected form's vector."""
    own, _ = embed_token(store, token)
    corrected = correct(token, lex)
    if corrected == token:
        return own.copy()
    other, _ = embed_token(store, corrected)
    return (own + other) / 2.0


def align_subtokens(
    misp_subtokens: list[str], norm_subtokens: list[str]
) -> list[tuple[str, str]]:
    """Pair misspelt subtokens with normalized-form subtokens.

    When the normalized side is shorter its first subtoken is repeated
    at the front until the counts match; when longer, its tail is
    truncated.  Output length always equals len(misp_subtokens).
    """
    if not misp_subtokens or not norm_subtokens:
        raise ValueError("subtoken lists must be non-empty")
    n_misp, n_norm = len(misp_subtokens), len(norm_subtokens)
    if n_norm < n_misp:
        norm = [norm_subtokens[0]] * (n_misp - n_norm) + list(norm_subtokens)
    else:
        norm = list(norm_subtokens[:n_misp])
    return list(zip(misp_subtokens, norm))
