"""Tokenized text containers, frequency tables and n-gram bookkeeping.

Sentences are plain tuples of token strings.  Input is assumed to be
pre-tokenized; the only normalization applied is whitespace splitting and
optional lowercasing.
"""

from __future__ import annotations

from bisect import bisect_left
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Optional, Sequence, Tuple

from .errors import EmptyCorpus, EmptySentence, RaggedReferences

Sentence = Tuple[str, ...]

MAX_ORDER = 4
UNK = "UNK"


def normalize_tokens(raw_line: str, lowercase: bool = False) -> Sentence:
    """Split ``raw_line`` on runs of whitespace, optionally lowercasing.

    >>> normalize_tokens("A man is playing", lowercase=True)
    ('a', 'man', 'is', 'playing')
    """
    if lowercase:
        raw_line = raw_line.lower()
    tokens = tuple(raw_line.split())
    if not tokens:
        raise EmptySentence("line is empty after trimming")
    return tokens


def detokenize(sentence: Sequence[str]) -> str:
    return " ".join(sentence)


@dataclass(frozen=True)
class Vocabulary:
    """Token frequency table."""

    counts: Mapping[str, int]
    total_tokens: int

    def __getitem__(self, token: str) -> int:
        return self.counts.get(token, 0)

    def __contains__(self, token: str) -> bool:
        return token in self.counts

    def __len__(self) -> int:
        return len(self.counts)

    def most_common(self, k: Optional[int] = None):
        return sorted(self.counts.items(), key=lambda kv: (-kv[1], kv[0]))[:k]

    def to_tsv(self) -> str:
        """Serialize as ``token<TAB>count`` lines, most frequent first."""
        return "".join(f"{tok}\t{cnt}\n" for tok, cnt in self.most_common())

    @classmethod
    def from_tsv(cls, text: str) -> "Vocabulary":
        counts = {}
        for line in text.splitlines():
            if not line.strip():
                continue
            tok, cnt = line.rsplit("\t", 1)
            counts[tok] = int(cnt)
        return cls(counts, sum(counts.values()))


def build_vocabulary(corpus: Sequence[Sequence[str]]) -> Vocabulary:
    if len(corpus) == 0:
        raise EmptyCorpus("cannot build a vocabulary from an empty corpus")
    counts = Counter()
    for sent in corpus:
        counts.update(sent)
    return Vocabulary(dict(counts), sum(counts.values()))


@dataclass(frozen=True)
class NGramProfile:
    order: int
    counts: Mapping[Tuple[str, ...], int]
    total: int


def ngrams(sentence: Sequence[str], n: int) -> Iterable[Tuple[str, ...]]:
    return (tuple(sentence[i:i + n]) for i in range(len(sentence) - n + 1))


def ngram_profile(sentence: Sequence[str], n: int) -> NGramProfile:
    if not 1 <= n <= MAX_ORDER:
        raise ValueError(f"n-gram order must be in 1..{MAX_ORDER}, got {n}")
    counts = Counter(ngrams(sentence, n))
    return NGramProfile(n, counts, max(0, len(sentence) - n + 1))


def closest_ref_length(hyp_len: int, ref_lens: Sequence[int]) -> int:
    """Reference length nearest to ``hyp_len``; ties go to the shorter one."""
    if not ref_lens:
        raise ValueError("ref_lens must be non-empty")
    return min(ref_lens, key=lambda r: (abs(r - hyp_len), r))


def closest_ref_length_sorted(hyp_len: int, sorted_lens: Sequence[int]) -> int:
    """Same as :func:`closest_ref_length` for an ascending list, in O(log k)."""
    k = bisect_left(sorted_lens, hyp_len)
    if k == len(sorted_lens):
        return sorted_lens[-1]
    if k == 0 or sorted_lens[k] == hyp_len:
        return sorted_lens[k]
    lo, hi = sorted_lens[k - 1], sorted_lens[k]
    return lo if hyp_len - lo <= hi - hyp_len else hi


@dataclass(frozen=True)
class ReferenceBundle:
    """C parallel reference corpora over the same N instances."""

    corpora: Tuple[Tuple[Sentence, ...], ...]

    def __post_init__(self):
        corpora = tuple(tuple(tuple(s) for s in corpus) for corpus in self.corpora)
        object.__setattr__(self, "corpora", corpora)
        if not corpora:
            raise RaggedReferences("a reference bundle needs at least one corpus")
        lengths = {len(c) for c in corpora}
        if len(lengths) != 1:
            raise RaggedReferences(
                f"reference corpora have unequal lengths: {[len(c) for c in corpora]}")
        if 0 in lengths:
            raise EmptyCorpus("reference corpora are empty")

    @property
    def num_corpora(self) -> int:
        return len(self.corpora)

    @property
    def num_instances(self) -> int:
        return len(self.corpora[0])

    def held_out(self, i: int) -> list:
        """Per-instance references from every corpus except ``i``."""
        others = [c for j, c in enumerate(self.corpora) if j != i]
        return [[c[n] for c in others] for n in range(self.num_instances)]


@dataclass(frozen=True)
class Instance:
    id: str
    refs: Tuple[Sentence, ...]
    hyp: Optional[Sentence] = None


@dataclass(frozen=True)
class EvalCorpus:
    """Ragged collection of instances, each with one or more references."""

    instances: Tuple[Instance, ...] = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, "instances", tuple(self.instances))
        seen = set()
        for inst in self.instances:
            if not inst.refs:
                raise ValueError(f"instance {inst.id!r} has no references")
            if inst.id in seen:
                raise ValueError(f"duplicate instance id {inst.id!r}")
            seen.add(inst.id)

    def __len__(self) -> int:
        return len(self.instances)

    @property
    def ids(self) -> list:
        return [inst.id for inst in self.instances]

    @property
    def refs(self) -> list:
        return [list(inst.refs) for inst in self.instances]

    @property
    def hyps(self) -> list:
        return [inst.hyp for inst in self.instances]
