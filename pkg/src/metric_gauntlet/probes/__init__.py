from .loo import LooResult, leave_one_out
from .perturb import PerturbOutcome, PerturbResult, PerturbSpec, perturb, perturb_and_score
from .search import (OBJECTIVES, BleuSearchIndex, SearchResult, score_fixed_hypothesis,
                     search_representative_sentence, unique_candidates)

__all__ = [
    "BleuSearchIndex", "LooResult", "OBJECTIVES", "PerturbOutcome", "PerturbResult",
    "PerturbSpec", "SearchResult", "leave_one_out", "perturb", "perturb_and_score",
    "score_fixed_hypothesis", "search_representative_sentence", "unique_candidates",
]
