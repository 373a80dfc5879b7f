"""Frequency-driven token substitutions on a hypothesis corpus.

Four modes, all preserving sentence count and every sentence length:

* ``targeted``: every occurrence of the target tokens becomes the replacement
  (``UNK`` by default).
* ``threshold``: tokens whose vocabulary count is below ``T`` are replaced,
  simulating a shortlisted vocabulary.  ``T <= 1`` keeps the full vocabulary.
* ``random_content``: token positions outside a stoplist are drawn uniformly
  without replacement (seeded) until the requested fraction is reached.
* ``swap``: like targeted, with a real word as replacement (woman -> man).
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from pathlib import Path
from typing import FrozenSet, List, Optional, Sequence, Tuple

from ..corpus import UNK, Sentence, Vocabulary
from ..errors import FractionUnreachable
from ..metrics.report import MetricReport, ScoreConfig, score_all

MODES = ("targeted", "threshold", "random_content", "swap")


@dataclass(frozen=True)
class PerturbSpec:
    mode: str
    targets: Tuple[str, ...] = ()
    replacement: str = UNK
    threshold: Optional[int] = None
    target_fraction: Optional[float] = None
    seed: int = 0
    stoplist: FrozenSet[str] = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "targets", tuple(self.targets))
        object.__setattr__(self, "stoplist", frozenset(self.stoplist))
        if self.mode not in MODES:
            raise ValueError(f"unknown perturbation mode {self.mode!r}; expected one of {MODES}")
        if self.mode in ("targeted", "swap") and not self.targets:
            raise ValueError(f"{self.mode} mode needs at least one target token")
        if self.mode == "swap" and len(self.targets) != 1:
            raise ValueError("swap mode takes exactly one source token")
        if self.mode == "threshold" and (self.threshold is None or self.threshold < 1):
            raise ValueError("threshold mode needs a positive integer T")
        if self.mode == "random_content":
            if self.target_fraction is None or not 0.0 < self.target_fraction <= 1.0:
                raise ValueError("random_content mode needs a fraction in (0, 1]")

    @classmethod
    def from_json(cls, data: dict, base_dir=None, stoplist_path=None) -> "PerturbSpec":
        """Build from the probe config object.

        Keys: ``mode``, ``targets``, ``replacement``, ``T``, ``fraction``,
        ``seed``, ``stoplist_file``.  A ``to`` key is accepted for swap mode.
        """
        mode = data["mode"]
        stop_file = stoplist_path or data.get("stoplist_file")
        stoplist = frozenset()
        if stop_file:
            path = Path(stop_file)
            if base_dir is not None and not path.is_absolute():
                path = Path(base_dir) / path
            stoplist = frozenset(path.read_text(encoding="utf-8").split())
        if mode == "random_content" and not stop_file:
            raise ValueError("random_content mode requires a stoplist file")
        targets = data.get("targets", ())
        if isinstance(targets, str):
            targets = [targets]
        replacement = data.get("replacement", data.get("to", UNK))
        return cls(mode=mode, targets=tuple(targets), replacement=replacement,
                   threshold=data.get("T"), target_fraction=data.get("fraction"),
                   seed=int(data.get("seed", 0)), stoplist=stoplist)


@dataclass
class PerturbResult:
    perturbed: List[Sentence]
    substituted_tokens: int
    total_tokens: int

    @property
    def substitution_fraction(self) -> float:
        return self.substituted_tokens / self.total_tokens if self.total_tokens else 0.0


def _replace_where(corpus, should_replace, replacement):
    out, hits = [], 0
    for sent in corpus:
        new = []
        for tok in sent:
            if should_replace(tok):
                new.append(replacement)
                hits += 1
            else:
                new.append(tok)
        out.append(tuple(new))
    return out, hits


def perturb(corpus: Sequence[Sentence], spec: PerturbSpec,
            vocab: Optional[Vocabulary] = None) -> PerturbResult:
    total = sum(len(s) for s in corpus)
    if spec.mode in ("targeted", "swap"):
        targets = frozenset(spec.targets)
        out, hits = _replace_where(corpus, targets.__contains__, spec.replacement)
    elif spec.mode == "threshold":
        if vocab is None:
            raise ValueError("threshold mode needs a vocabulary")
        if spec.threshold <= 1:
            out, hits = [tuple(s) for s in corpus], 0
        else:
            out, hits = _replace_where(corpus, lambda t: vocab[t] < spec.threshold,
                                       spec.replacement)
    else:
        out, hits = _random_content(corpus, spec, total)
    return PerturbResult(out, hits, total)


def _random_content(corpus, spec: PerturbSpec, total: int):
    positions = [(i, j) for i, sent in enumerate(corpus)
                 for j, tok in enumerate(sent) if tok not in spec.stoplist]
    needed = math.ceil(spec.target_fraction * total - 1e-9)
    if needed > len(positions):
        raise FractionUnreachable(
            f"need {needed} substitutions for {spec.target_fraction:.2%} of {total} tokens, "
            f"only {len(positions)} content tokens available")
    rng = random.Random(spec.seed)
    chosen = set(rng.sample(positions, needed))
    out = [tuple(spec.replacement if (i, j) in chosen else tok for j, tok in enumerate(sent))
           for i, sent in enumerate(corpus)]
    return out, needed


@dataclass
class PerturbOutcome:
    perturbed: List[Sentence]
    substituted_tokens: int
    substitution_fraction: float
    report_before: MetricReport
    report_after: MetricReport
    deltas: MetricReport

    def to_dict(self) -> dict:
        return {
            "substituted_tokens": self.substituted_tokens,
            "substitution_fraction": self.substitution_fraction,
            "before": self.report_before.scores(),
            "after": self.report_after.scores(),
            "deltas": self.deltas.scores(),
            "perturbed": [" ".join(s) for s in self.perturbed],
        }


def perturb_and_score(hyps: Sequence[Sentence], heldout_refs, spec: PerturbSpec,
                      vocab: Optional[Vocabulary] = None,
                      config: ScoreConfig = ScoreConfig()) -> PerturbOutcome:
    """Score a corpus before and after perturbation against held-out refs.

    ``deltas`` is ``after - before``, so drops are negative.
    """
    result = perturb(hyps, spec, vocab)
    before = score_all(list(hyps), heldout_refs, config)
    after = score_all(result.perturbed, heldout_refs, config)
    return PerturbOutcome(result.perturbed, result.substituted_tokens,
                          result.substitution_fraction, before, after, after - before)
