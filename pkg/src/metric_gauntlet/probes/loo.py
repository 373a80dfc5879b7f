"""Leave-one-out scoring over C parallel reference corpora.

At iteration i the candidate corpus is either reference corpus i
(reference-vs-reference) or a fixed system output (system-vs-reference),
always scored against the remaining C-1 corpora.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Sequence

from ..corpus import ReferenceBundle
from ..errors import RaggedReferences
from ..metrics.embedding import EmbeddedSentence
from ..metrics.report import MetricReport, ScoreConfig, mean_report, score_all, sd_report


@dataclass
class LooResult:
    per_iteration: List[MetricReport]
    mean: MetricReport
    sd: MetricReport

    def to_dict(self) -> dict:
        return {
            "per_iteration": [r.to_dict() for r in self.per_iteration],
            "mean": self.mean.scores(),
            "sd": self.sd.scores(),
        }

    @classmethod
    def from_dict(cls, data: dict) -> "LooResult":
        return cls([MetricReport.from_dict(r) for r in data["per_iteration"]],
                   MetricReport.from_dict(data["mean"]), MetricReport.from_dict(data["sd"]))


def leave_one_out(bundle: ReferenceBundle, sys=None, config: ScoreConfig = ScoreConfig(),
                  embeddings: Optional[Sequence[Sequence[EmbeddedSentence]]] = None,
                  sys_embeddings: Optional[Sequence[EmbeddedSentence]] = None) -> LooResult:
    """Average every metric over the C leave-one-out iterations.

    ``embeddings``, when given, holds one list of embedded sentences per
    reference corpus (same order as ``bundle.corpora``).  ``sys_embeddings``
    is needed for the embedding score of a system run.
    """
    if bundle.num_corpora < 2:
        raise RaggedReferences("leave-one-out needs at least two reference corpora")
    if sys is not None and len(sys) != bundle.num_instances:
        raise RaggedReferences(
            f"system output has {len(sys)} lines, references have {bundle.num_instances}")
    if embeddings is not None and len(embeddings) != bundle.num_corpora:
        raise ValueError("need one embedding list per reference corpus")

    reports = []
    for i in range(bundle.num_corpora):
        held_out = bundle.held_out(i)
        hyps = list(bundle.corpora[i]) if sys is None else list(sys)
        hyp_emb = ref_emb = None
        if embeddings is not None:
            hyp_emb = embeddings[i] if sys is None else sys_embeddings
            ref_emb = [[e[n] for j, e in enumerate(embeddings) if j != i]
                       for n in range(bundle.num_instances)]
        reports.append(score_all(hyps, held_out, config, hyp_emb, ref_emb))
    return LooResult(reports, mean_report(reports), sd_report(reports))
