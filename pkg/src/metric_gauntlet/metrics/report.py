"""One-call scoring of a hypothesis corpus with every metric."""

from __future__ import annotations

import math
from dataclasses import dataclass, field, fields
from typing import Dict, List, Optional, Sequence

from ..errors import EmptyCorpus
from .bleu import BleuConfig, bleu_from_stats, bleu_stats, brevity_penalty
from .cider import CiderConfig, IdfTable, cider_d
from .embedding import EmbeddedSentence, greedy_embed_fscore
from .meteor import MeteorConfig, meteor_score
from .rouge import DEFAULT_BETA, rouge_l

SCORE_FIELDS = ("bleu1", "bleu2", "bleu3", "bleu4", "meteor", "rouge_l", "cider_d", "bert_f")


@dataclass
class MetricReport:
    bleu1: Optional[float] = None
    bleu2: Optional[float] = None
    bleu3: Optional[float] = None
    bleu4: Optional[float] = None
    meteor: Optional[float] = None
    rouge_l: Optional[float] = None
    cider_d: Optional[float] = None
    bert_f: Optional[float] = None
    diagnostics: Dict[str, object] = field(default_factory=dict)

    def scores(self) -> Dict[str, Optional[float]]:
        return {name: getattr(self, name) for name in SCORE_FIELDS}

    def to_dict(self) -> dict:
        out = self.scores()
        if self.diagnostics:
            out["diagnostics"] = dict(self.diagnostics)
        return out

    @classmethod
    def from_dict(cls, data: dict) -> "MetricReport":
        known = {f.name for f in fields(cls)}
        return cls(**{k: v for k, v in data.items() if k in known})

    def __sub__(self, other: "MetricReport") -> "MetricReport":
        """Per-field difference; absent on either side stays absent."""
        out = {}
        for name in SCORE_FIELDS:
            a, b = getattr(self, name), getattr(other, name)
            out[name] = None if a is None or b is None else a - b
        return MetricReport(**out)


def mean_report(reports: Sequence[MetricReport]) -> MetricReport:
    out = {}
    for name in SCORE_FIELDS:
        vals = [getattr(r, name) for r in reports]
        out[name] = None if any(v is None for v in vals) else math.fsum(vals) / len(vals)
    return MetricReport(**out)


def sd_report(reports: Sequence[MetricReport]) -> MetricReport:
    """Population standard deviation per field (divides by the count)."""
    mean = mean_report(reports)
    out = {}
    for name in SCORE_FIELDS:
        mu = getattr(mean, name)
        if mu is None:
            out[name] = None
            continue
        var = math.fsum((getattr(r, name) - mu) ** 2 for r in reports) / len(reports)
        out[name] = math.sqrt(var)
    return MetricReport(**out)


@dataclass(frozen=True)
class ScoreConfig:
    bleu: BleuConfig = BleuConfig()
    meteor: MeteorConfig = MeteorConfig()
    cider: CiderConfig = CiderConfig()
    rouge_beta: float = DEFAULT_BETA
    embedding_baseline: float = 0.0
    embedding_idf: bool = False


def score_all(hyps, refs, config: ScoreConfig = ScoreConfig(),
              hyp_embeddings: Optional[Sequence[EmbeddedSentence]] = None,
              ref_embeddings: Optional[Sequence[Sequence[EmbeddedSentence]]] = None,
              idf: Optional[IdfTable] = None) -> MetricReport:
    """Score ``hyps`` against ``refs`` with every metric.

    Sentence-level METEOR, ROUGE-L and embedding F are averaged over
    instances; BLEU and CIDEr-D are corpus-level.  ``bert_f`` stays
    ``None`` unless both embedding lists are given.
    """
    if len(hyps) == 0:
        raise EmptyCorpus("no hypotheses to score")
    if len(hyps) != len(refs):
        raise ValueError(f"{len(hyps)} hypotheses but {len(refs)} reference sets")

    stats = bleu_stats(hyps, refs, config.bleu.max_order)
    bleu = bleu_from_stats(stats, config.bleu.smoothing_epsilon)
    report = MetricReport()
    for k, value in enumerate(bleu, start=1):
        setattr(report, f"bleu{k}", value)

    n = len(hyps)
    report.meteor = math.fsum(meteor_score(h, r, config.meteor) for h, r in zip(hyps, refs)) / n
    report.rouge_l = math.fsum(rouge_l(h, r, config.rouge_beta) for h, r in zip(hyps, refs)) / n
    report.cider_d = cider_d(hyps, refs, config.cider, idf)

    if hyp_embeddings is not None and ref_embeddings is not None:
        report.bert_f = embedding_corpus_score(hyp_embeddings, ref_embeddings, config)

    report.diagnostics = {
        "num_instances": n,
        "hyp_len": stats.hyp_len,
        "ref_len": stats.ref_len,
        "brevity_penalty": brevity_penalty(stats.hyp_len, stats.ref_len),
        "precisions": [c / t if t else 0.0 for c, t in zip(stats.clipped, stats.totals)],
    }
    return report


def embedding_corpus_score(hyp_embeddings, ref_embeddings, config: ScoreConfig = ScoreConfig()) -> float:
    if len(hyp_embeddings) != len(ref_embeddings):
        raise ValueError("embedding lists are not aligned")
    vals: List[float] = [
        greedy_embed_fscore(h, r, config.embedding_baseline, config.embedding_idf)
        for h, r in zip(hyp_embeddings, ref_embeddings)
    ]
    return math.fsum(vals) / len(vals)
