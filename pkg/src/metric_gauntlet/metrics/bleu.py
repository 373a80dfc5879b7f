"""Corpus-level BLEU with clipped n-gram precision and brevity penalty."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import List, Sequence, Tuple

from ..corpus import MAX_ORDER, NGramProfile, closest_ref_length, ngram_profile
from ..errors import EmptyCorpus


@dataclass(frozen=True)
class BleuConfig:
    max_order: int = 4
    smoothing_epsilon: float = 0.0

    def __post_init__(self):
        if not 1 <= self.max_order <= MAX_ORDER:
            raise ValueError(f"max_order must be in 1..{MAX_ORDER}")
        if self.smoothing_epsilon < 0:
            raise ValueError("smoothing_epsilon must be non-negative")


@dataclass(frozen=True)
class BleuStats:
    """Sufficient statistics for corpus BLEU."""

    clipped: Tuple[int, ...]
    totals: Tuple[int, ...]
    hyp_len: int
    ref_len: int


def clipped_counts(hyp_profile: NGramProfile,
                   ref_profiles: Sequence[NGramProfile]) -> Tuple[int, int]:
    """Clip each hypothesis n-gram count by its max count in any one reference."""
    clipped = 0
    for gram, count in hyp_profile.counts.items():
        best = 0
        for ref in ref_profiles:
            best = max(best, ref.counts.get(gram, 0))
        clipped += min(count, best)
    return clipped, hyp_profile.total


def bleu_stats(hyps, refs, max_order: int = MAX_ORDER) -> BleuStats:
    if len(hyps) != len(refs):
        raise ValueError(f"{len(hyps)} hypotheses but {len(refs)} reference sets")
    if not hyps:
        raise EmptyCorpus("BLEU needs at least one instance")
    clipped = [0] * max_order
    totals = [0] * max_order
    hyp_len = ref_len = 0
    for hyp, ref_set in zip(hyps, refs):
        if not ref_set:
            raise ValueError("every instance needs at least one reference")
        hyp_len += len(hyp)
        ref_len += closest_ref_length(len(hyp), [len(r) for r in ref_set])
        for n in range(1, max_order + 1):
            c, t = clipped_counts(ngram_profile(hyp, n),
                                  [ngram_profile(r, n) for r in ref_set])
            clipped[n - 1] += c
            totals[n - 1] += t
    return BleuStats(tuple(clipped), tuple(totals), hyp_len, ref_len)


def brevity_penalty(hyp_len: int, ref_len: int) -> float:
    if hyp_len >= ref_len:
        return 1.0
    if hyp_len == 0:
        return 0.0
    return math.exp(1.0 - ref_len / hyp_len)


def bleu_from_stats(stats: BleuStats, smoothing_epsilon: float = 0.0) -> List[float]:
    """BLEU-1..BLEU-k on a 0-100 scale, k = number of orders in ``stats``.

    Without smoothing a zero precision at order n zeroes every BLEU-k with
    k >= n.  With ``smoothing_epsilon > 0`` a zero match count is replaced
    by epsilon.
    """
    bp = brevity_penalty(stats.hyp_len, stats.ref_len)
    scores = []
    log_sum = 0.0
    dead = False
    for k, (c, t) in enumerate(zip(stats.clipped, stats.totals), start=1):
        if not dead:
            if c > 0:
                log_sum += math.log(c / t)
            elif smoothing_epsilon > 0:
                log_sum += math.log(smoothing_epsilon / max(t, 1))
            else:
                dead = True
        scores.append(0.0 if dead or bp == 0.0 else 100.0 * bp * math.exp(log_sum / k))
    return scores


def bleu_corpus(hyps, refs, cfg: BleuConfig = BleuConfig()) -> List[float]:
    """Corpus BLEU-1..BLEU-``cfg.max_order``.

    ``hyps`` is a list of token sequences and ``refs`` a parallel list of
    reference lists.  Effective reference length per instance is the
    closest reference length (ties to the shorter).
    """
    stats = bleu_stats(hyps, refs, cfg.max_order)
    return bleu_from_stats(stats, cfg.smoothing_epsilon)
