"""Single representative sentence adversary.

One training sentence is emitted as the hypothesis for every test
instance; we look for the sentence maximizing a corpus-level metric.

For BLEU objectives the fast path never materializes the N copies.  For a
fixed candidate s, corpus clipped matches of an n-gram g with count c in
s are ``sum_i min(c, maxref_i(g))``, where maxref_i(g) is g's maximum count
in any reference of instance i.  Keeping the non-zero maxref_i(g) values
sorted with prefix sums answers that sum with one bisection.  The summed
effective reference length depends only on |s| and is memoized.  The
resulting integer statistics are identical to the naive ones, so scores
agree bit for bit.
"""

from __future__ import annotations

import math
import os
from bisect import bisect_right
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from typing import Dict, List, Optional, Sequence, Tuple

from ..corpus import MAX_ORDER, Sentence, closest_ref_length_sorted, ngrams
from ..errors import EmptyCorpus
from ..metrics.bleu import BleuConfig, BleuStats, bleu_corpus, bleu_from_stats
from ..metrics.cider import build_idf, cider_d
from ..metrics.meteor import meteor_score
from ..metrics.report import MetricReport, ScoreConfig, score_all
from ..metrics.rouge import rouge_l

BLEU_OBJECTIVES = {"bleu1": 1, "bleu2": 2, "bleu3": 3, "bleu4": 4}
OBJECTIVES = tuple(BLEU_OBJECTIVES) + ("meteor", "rouge_l", "cider_d")
SEARCH_EPSILON = 1e-7
THREADS_ENV = "METRIC_GAUNTLET_THREADS"


def score_fixed_hypothesis(s: Sentence, refs, objective: str = "bleu4",
                           config: ScoreConfig = ScoreConfig()) -> float:
    """Corpus score obtained by answering every instance with ``s``."""
    if not refs:
        raise EmptyCorpus("no test instances")
    hyps = [tuple(s)] * len(refs)
    if objective in BLEU_OBJECTIVES:
        order = BLEU_OBJECTIVES[objective]
        cfg = BleuConfig(order, config.bleu.smoothing_epsilon)
        return bleu_corpus(hyps, refs, cfg)[order - 1]
    if objective == "meteor":
        return math.fsum(meteor_score(h, r, config.meteor) for h, r in zip(hyps, refs)) / len(refs)
    if objective == "rouge_l":
        return math.fsum(rouge_l(h, r, config.rouge_beta) for h, r in zip(hyps, refs)) / len(refs)
    if objective == "cider_d":
        return cider_d(hyps, refs, config.cider)
    raise ValueError(f"unknown objective {objective!r}; expected one of {OBJECTIVES}")


class BleuSearchIndex:
    """Read-only n-gram index over test references for fixed-hypothesis BLEU."""

    def __init__(self, refs, max_order: int = MAX_ORDER):
        if not refs:
            raise EmptyCorpus("no test instances")
        self.max_order = max_order
        self.num_instances = len(refs)
        per_gram: Dict[tuple, List[int]] = {}
        for ref_set in refs:
            best: Counter = Counter()
            for ref in ref_set:
                for n in range(1, max_order + 1):
                    for g, c in Counter(ngrams(ref, n)).items():
                        if c > best[g]:
                            best[g] = c
            for g, c in best.items():
                per_gram.setdefault(g, []).append(c)
        self._index: Dict[tuple, Tuple[List[int], List[int]]] = {}
        for g, counts in per_gram.items():
            counts.sort()
            prefix = [0]
            for c in counts:
                prefix.append(prefix[-1] + c)
            self._index[g] = (counts, prefix)
        self._ref_lens = [sorted(len(r) for r in ref_set) for ref_set in refs]
        self._ref_len_memo: Dict[int, int] = {}

    def clipped_sum(self, gram: tuple, count: int) -> int:
        """sum over instances of min(count, max reference count of gram)."""
        entry = self._index.get(gram)
        if entry is None:
            return 0
        counts, prefix = entry
        k = bisect_right(counts, count)
        return prefix[k] + count * (len(counts) - k)

    def effective_ref_len(self, hyp_len: int) -> int:
        total = self._ref_len_memo.get(hyp_len)
        if total is None:
            total = sum(closest_ref_length_sorted(hyp_len, lens) for lens in self._ref_lens)
            self._ref_len_memo[hyp_len] = total
        return total

    def stats(self, s: Sentence) -> BleuStats:
        big_n = self.num_instances
        clipped, totals = [], []
        for n in range(1, self.max_order + 1):
            c = 0
            for g, cnt in Counter(ngrams(s, n)).items():
                c += self.clipped_sum(g, cnt)
            clipped.append(c)
            totals.append(big_n * max(0, len(s) - n + 1))
        return BleuStats(tuple(clipped), tuple(totals), big_n * len(s),
                         self.effective_ref_len(len(s)))


def _tie_key(score: float, s: Sentence):
    # best = smallest key: highest score, then shortest, then lexicographic
    return (-score, len(s), s)


@dataclass
class SearchResult:
    sentence: Sentence
    objective_score: float
    objective: str
    candidates_evaluated: int
    full_report: MetricReport
    search_score: float = field(default=0.0)

    def to_dict(self) -> dict:
        return {
            "sentence": " ".join(self.sentence),
            "objective": self.objective,
            "objective_score": self.objective_score,
            "search_score": self.search_score,
            "candidates_evaluated": self.candidates_evaluated,
            "full_report": self.full_report.scores(),
        }

    @classmethod
    def from_dict(cls, data: dict) -> "SearchResult":
        return cls(tuple(data["sentence"].split()), data["objective_score"], data["objective"],
                   data["candidates_evaluated"], MetricReport.from_dict(data["full_report"]),
                   data.get("search_score", 0.0))


# worker-process state; set by the pool initializer, read-only afterwards
_worker_state: dict = {}


def _init_worker(state):
    _worker_state.clear()
    _worker_state.update(state)


def _best_in_chunk(chunk):
    state = _worker_state
    best = None
    for s in chunk:
        if state["index"] is not None:
            stats = state["index"].stats(s)
            score = bleu_from_stats(stats, state["eps"])[state["order"] - 1]
        else:
            score = score_fixed_hypothesis(s, state["refs"], state["objective"], state["config"])
        key = _tie_key(score, s)
        if best is None or key < best:
            best = key
    return best


def _resolve_workers(workers: Optional[int]) -> int:
    if workers is None:
        workers = int(os.environ.get(THREADS_ENV, "1") or 1)
    return max(1, workers)


def unique_candidates(train: Sequence[Sentence]) -> List[Sentence]:
    return sorted({tuple(s) for s in train}, key=lambda s: (len(s), s))


def search_representative_sentence(train: Sequence[Sentence], refs, objective: str = "bleu4",
                                   config: ScoreConfig = ScoreConfig(), naive: bool = False,
                                   workers: Optional[int] = None,
                                   search_epsilon: float = SEARCH_EPSILON) -> SearchResult:
    """Find the training sentence that maximizes the corpus ``objective``.

    BLEU objectives rank candidates with epsilon smoothing (so candidates
    shorter than the top order still compare), but the reported
    ``objective_score`` is the unsmoothed score of the winner.  Non-BLEU
    objectives always use the naive path.  ``workers`` defaults to the
    ``METRIC_GAUNTLET_THREADS`` environment variable, else 1; the result
    does not depend on it.
    """
    if objective not in OBJECTIVES:
        raise ValueError(f"unknown objective {objective!r}; expected one of {OBJECTIVES}")
    candidates = unique_candidates(train)
    if not candidates:
        raise EmptyCorpus("training corpus is empty")
    if not refs:
        raise EmptyCorpus("no test instances")

    is_bleu = objective in BLEU_OBJECTIVES
    search_config = config
    if is_bleu:
        search_config = replace(config, bleu=BleuConfig(config.bleu.max_order, search_epsilon))
    state = {
        "index": BleuSearchIndex(refs, BLEU_OBJECTIVES[objective]) if is_bleu and not naive else None,
        "order": BLEU_OBJECTIVES.get(objective),
        "eps": search_epsilon,
        "refs": refs,
        "objective": objective,
        "config": search_config,
    }

    n_workers = min(_resolve_workers(workers), len(candidates))
    if n_workers == 1:
        _init_worker(state)
        best = _best_in_chunk(candidates)
    else:
        size = -(-len(candidates) // (4 * n_workers))
        chunks = [candidates[i:i + size] for i in range(0, len(candidates), size)]
        with ProcessPoolExecutor(n_workers, initializer=_init_worker, initargs=(state,)) as pool:
            best = min(pool.map(_best_in_chunk, chunks))

    search_score, _, winner = best
    search_score = -search_score
    reported = score_fixed_hypothesis(winner, refs, objective, config)
    report = score_all([winner] * len(refs), refs, config)
    return SearchResult(winner, reported, objective, len(candidates), report, search_score)
