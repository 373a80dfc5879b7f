"""Greedy token-embedding matching F-score (BERTScore-style).

Embeddings are supplied by the caller; nothing here runs a model.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from ..errors import EmbeddingDimError


@dataclass(frozen=True, eq=False)
class EmbeddedSentence:
    tokens: tuple
    vectors: np.ndarray
    idf: Optional[np.ndarray] = None

    def __post_init__(self):
        vectors = np.asarray(self.vectors, dtype=np.float64)
        if vectors.ndim != 2:
            raise EmbeddingDimError(f"expected a 2-d vector array, got shape {vectors.shape}")
        if vectors.shape[0] != len(self.tokens):
            raise EmbeddingDimError(
                f"{len(self.tokens)} tokens but {vectors.shape[0]} vectors")
        object.__setattr__(self, "tokens", tuple(self.tokens))
        object.__setattr__(self, "vectors", vectors)
        if self.idf is not None:
            idf = np.asarray(self.idf, dtype=np.float64)
            if idf.shape != (len(self.tokens),):
                raise EmbeddingDimError("idf weights must have one entry per token")
            object.__setattr__(self, "idf", idf)

    @property
    def dim(self) -> int:
        return self.vectors.shape[1]


def _unit_rows(x: np.ndarray) -> np.ndarray:
    norms = np.linalg.norm(x, axis=1, keepdims=True)
    return np.divide(x, norms, out=np.zeros_like(x), where=norms > 0)


def _weights(sent: EmbeddedSentence, use_idf: bool) -> np.ndarray:
    if use_idf and sent.idf is not None:
        return sent.idf
    return np.ones(len(sent.tokens))


def greedy_precision_recall(hyp: EmbeddedSentence, ref: EmbeddedSentence,
                            use_idf: bool = False):
    if hyp.dim != ref.dim:
        raise EmbeddingDimError(f"dimension mismatch: {hyp.dim} vs {ref.dim}")
    sim = _unit_rows(hyp.vectors) @ _unit_rows(ref.vectors).T
    wh, wr = _weights(hyp, use_idf), _weights(ref, use_idf)
    precision = float(wh @ sim.max(axis=1) / wh.sum())
    recall = float(wr @ sim.max(axis=0) / wr.sum())
    return precision, recall


def greedy_embed_fscore(hyp: EmbeddedSentence, refs: Sequence[EmbeddedSentence],
                        baseline: float = 0.0, use_idf: bool = False) -> float:
    """Best rescaled greedy-matching F over ``refs``.

    The rescaled value is ``(F - baseline) / (1 - baseline)`` and can be
    negative.
    """
    if not 0.0 <= baseline < 1.0:
        raise ValueError("baseline must lie in [0, 1)")
    if not refs:
        raise ValueError("greedy_embed_fscore needs at least one reference")
    best = -np.inf
    for ref in refs:
        p, r = greedy_precision_recall(hyp, ref, use_idf)
        f = 0.0 if p + r == 0 else 2 * p * r / (p + r)
        best = max(best, (f - baseline) / (1.0 - baseline))
    return float(best)
