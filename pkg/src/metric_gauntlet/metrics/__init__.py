from .bleu import BleuConfig, BleuStats, bleu_corpus, bleu_from_stats, bleu_stats, brevity_penalty, clipped_counts
from .cider import CiderConfig, IdfTable, build_idf, cider_d, cider_d_scores
from .embedding import EmbeddedSentence, greedy_embed_fscore
from .meteor import Alignment, MeteorConfig, SynonymLexicon, meteor_align, meteor_score
from .report import SCORE_FIELDS, MetricReport, ScoreConfig, mean_report, score_all, sd_report
from .rouge import LcsColumns, lcs_length, rouge_l

__all__ = [
    "Alignment", "BleuConfig", "BleuStats", "CiderConfig", "EmbeddedSentence", "IdfTable",
    "LcsColumns", "MeteorConfig", "MetricReport", "SCORE_FIELDS", "ScoreConfig", "SynonymLexicon",
    "bleu_corpus", "bleu_from_stats", "bleu_stats", "brevity_penalty", "build_idf",
    "cider_d", "cider_d_scores", "clipped_counts", "greedy_embed_fscore", "lcs_length",
    "mean_report", "meteor_align", "meteor_score", "rouge_l", "score_all", "sd_report",
]
