"""ROUGE-L: longest-common-subsequence F-measure."""

from __future__ import annotations

from typing import Sequence

import numpy as np

DEFAULT_BETA = 1.2


def lcs_length(a: Sequence[str], b: Sequence[str]) -> int:
    if len(a) < len(b):
        a, b = b, a
    # single-row DP over the shorter sequence
    prev = [0] * (len(b) + 1)
    for x in a:
        cur = [0]
        for j, y in enumerate(b, start=1):
            if x == y:
                cur.append(prev[j - 1] + 1)
            else:
                cur.append(cur[j - 1] if cur[j - 1] > prev[j] else prev[j])
        prev = cur
    return prev[-1]


class LcsColumns:
    """LCS of many sequences against one sequence revealed token by token.

    Holds the last DP column for every row sequence at once.  ``extend``
    returns a new state, so a depth-first walk over a prefix tree of
    column sequences shares the work for common prefixes.
    """

    def __init__(self, rows: Sequence[Sequence[str]]):
        width = max((len(r) for r in rows), default=0)
        self._codes_of = {}
        codes = np.full((len(rows), width), -1, dtype=np.int64)
        for i, row in enumerate(rows):
            for j, tok in enumerate(row):
                codes[i, j] = self._codes_of.setdefault(tok, len(self._codes_of))
        self._codes = codes
        self._col = np.zeros((len(rows), width + 1), dtype=np.int16)

    def extend(self, token: str) -> "LcsColumns":
        code = self._codes_of.get(token, -2)  # -2 never matches, -1 is padding
        prev = self._col
        col = np.empty_like(prev)
        col[:, 0] = 0
        for i in range(1, prev.shape[1]):
            col[:, i] = np.where(self._codes[:, i - 1] == code, prev[:, i - 1] + 1,
                                 np.maximum(col[:, i - 1], prev[:, i]))
        out = object.__new__(LcsColumns)
        out._codes_of, out._codes, out._col = self._codes_of, self._codes, col
        return out

    @property
    def lengths(self) -> np.ndarray:
        """LCS of each row sequence with the tokens seen so far."""
        return self._col[:, -1].copy()


def rouge_l_single(hyp: Sequence[str], ref: Sequence[str], beta: float = DEFAULT_BETA) -> float:
    lcs = lcs_length(hyp, ref)
    if lcs == 0:
        return 0.0
    rec = lcs / len(ref)
    prec = lcs / len(hyp)
    b2 = beta * beta
    return 100.0 * (1 + b2) * rec * prec / (rec + b2 * prec)


def rouge_l(hyp: Sequence[str], refs: Sequence[Sequence[str]], beta: float = DEFAULT_BETA) -> float:
    """Best ROUGE-L F-score (0-100) of ``hyp`` against any of ``refs``."""
    if not refs:
        raise ValueError("rouge_l needs at least one reference")
    if beta <= 0:
        raise ValueError("beta must be positive")
    return max(rouge_l_single(hyp, ref, beta) for ref in refs)
