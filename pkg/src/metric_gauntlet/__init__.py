"""Reimplementations of common NLG metrics plus stress-test probes.

Metrics: corpus BLEU-1..4, METEOR, ROUGE-L, CIDEr-D and a greedy
embedding-matching F-score.  Probes: leave-one-out reference scoring,
frequency-targeted perturbations and a single-sentence adversary.
"""

from .corpus import (UNK, EvalCorpus, Instance, NGramProfile, ReferenceBundle, Vocabulary,
                     build_vocabulary, closest_ref_length, ngram_profile, normalize_tokens)
from .errors import (AlignmentError, EmbeddingDimError, EmptyCorpus, EmptySentence,
                     FractionUnreachable, GauntletError, RaggedReferences)
from .metrics import *  # noqa: F401,F403
from .metrics import __all__ as _metrics_all
from .probes import *  # noqa: F401,F403
from .probes import __all__ as _probes_all

__version__ = "0.1.0"

__all__ = [
    "UNK", "EvalCorpus", "Instance", "NGramProfile", "ReferenceBundle", "Vocabulary",
    "build_vocabulary", "closest_ref_length", "ngram_profile", "normalize_tokens",
    "AlignmentError", "EmbeddingDimError", "EmptyCorpus", "EmptySentence",
    "FractionUnreachable", "GauntletError", "RaggedReferences",
    *_metrics_all, *_probes_all,
]
