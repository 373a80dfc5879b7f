"""CIDEr-D consensus scoring.

Each test instance's reference set forms one document for the document
frequencies.  N-gram vectors hold raw counts times idf; the candidate
vector is clipped element-wise by the reference vector, and a Gaussian
length penalty discounts length mismatches.
"""

from __future__ import annotations

import math
import warnings
from collections import Counter
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from ..corpus import MAX_ORDER, ngrams


@dataclass(frozen=True)
class CiderConfig:
    max_order: int = 4
    sigma: float = 6.0

    def __post_init__(self):
        if not 1 <= self.max_order <= MAX_ORDER:
            raise ValueError(f"max_order must be in 1..{MAX_ORDER}")
        if self.sigma <= 0:
            raise ValueError("sigma must be positive")


@dataclass(frozen=True)
class IdfTable:
    doc_freq: Tuple[Dict[tuple, int], ...]
    num_documents: int

    @property
    def max_order(self) -> int:
        return len(self.doc_freq)

    @property
    def log_num_documents(self) -> float:
        return math.log(self.num_documents)

    def idf(self, gram: tuple) -> float:
        df = self.doc_freq[len(gram) - 1].get(gram, 0)
        return self.log_num_documents - math.log(max(1, df))


def build_idf(corpus_refs: Sequence[Sequence[Sequence[str]]], max_order: int = MAX_ORDER) -> IdfTable:
    if not corpus_refs:
        raise ValueError("build_idf needs at least one instance")
    dfs = tuple(Counter() for _ in range(max_order))
    for refs in corpus_refs:
        for n in range(1, max_order + 1):
            dfs[n - 1].update({g for r in refs for g in ngrams(r, n)})
    return IdfTable(tuple(dict(d) for d in dfs), len(corpus_refs))


def _vectors(sentence, idf: IdfTable, max_order: int):
    vecs, norms = [], []
    for n in range(1, max_order + 1):
        vec = {g: c * idf.idf(g) for g, c in Counter(ngrams(sentence, n)).items()}
        vecs.append(vec)
        norms.append(math.sqrt(sum(v * v for v in vec.values())))
    return vecs, norms


def cider_d_instance(hyp, refs, cfg: CiderConfig, idf: IdfTable) -> float:
    """CIDEr-D of a single candidate on the 0-10 scale."""
    hvecs, hnorms = _vectors(hyp, idf, cfg.max_order)
    total = 0.0
    for ref in refs:
        rvecs, rnorms = _vectors(ref, idf, cfg.max_order)
        delta = len(hyp) - len(ref)
        penalty = math.exp(-(delta * delta) / (2.0 * cfg.sigma ** 2))
        sim = 0.0
        for n in range(cfg.max_order):
            if hnorms[n] == 0.0 or rnorms[n] == 0.0:
                continue
            rvec = rvecs[n]
            dot = 0.0
            for g, hv in hvecs[n].items():
                rv = rvec.get(g)
                if rv is not None:
                    dot += min(hv, rv) * rv
            sim += dot / (hnorms[n] * rnorms[n])
        total += penalty * sim / cfg.max_order
    return 10.0 * total / len(refs)


def cider_d_scores(hyps, refs, cfg: CiderConfig = CiderConfig(),
                   idf: Optional[IdfTable] = None) -> List[float]:
    if len(hyps) != len(refs):
        raise ValueError(f"{len(hyps)} hypotheses but {len(refs)} reference sets")
    if idf is None:
        idf = build_idf(refs, cfg.max_order)
    elif idf.max_order < cfg.max_order:
        raise ValueError(f"idf table covers orders 1..{idf.max_order}, need {cfg.max_order}")
    if idf.num_documents == 1:
        warnings.warn("CIDEr-D on a single-document corpus: every idf is 0, scores are 0",
                      RuntimeWarning, stacklevel=2)
    return [cider_d_instance(h, r, cfg, idf) for h, r in zip(hyps, refs)]


def cider_d(hyps, refs, cfg: CiderConfig = CiderConfig(), idf: Optional[IdfTable] = None) -> float:
    """Corpus CIDEr-D: mean instance score, 0-10 scale (e.g. 0.896).

    ``idf`` defaults to document frequencies over ``refs``.
    """
    scores = cider_d_scores(hyps, refs, cfg, idf)
    if not scores:
        return 0.0
    return math.fsum(scores) / len(scores)
