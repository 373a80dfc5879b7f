"""METEOR-style alignment and scoring.

Alignment runs in stages (exact surface, Porter stem, synonym); each stage
only considers tokens left unmatched by earlier stages.  Within a stage we
take a maximum-cardinality one-to-one matching and, among those, one with
the fewest chunks given the matches already fixed.  This is exact when at
most ``EXHAUSTIVE_LIMIT`` hypothesis tokens are ambiguous and a fixed-width
beam otherwise.

Parity with the Meteor 1.5 jar (paraphrase tables, function-word weights)
is not attempted.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

from nltk.stem.porter import PorterStemmer

EXACT, STEM, SYNONYM = "exact", "stem", "synonym"
STAGES = (EXACT, STEM, SYNONYM)

EXHAUSTIVE_LIMIT = 12
BEAM_WIDTH = 40

_stemmer = PorterStemmer()


@lru_cache(maxsize=65536)
def stem(token: str) -> str:
    return _stemmer.stem(token)


class SynonymLexicon:
    """Sets of mutually synonymous surface forms."""

    def __init__(self, synsets: Sequence[Sequence[str]] = ()):
        self._ids: Dict[str, FrozenSet[int]] = {}
        index: Dict[str, set] = {}
        for k, syns in enumerate(synsets):
            for tok in syns:
                index.setdefault(tok, set()).add(k)
        self._ids = {tok: frozenset(ids) for tok, ids in index.items()}

    @classmethod
    def from_text(cls, text: str) -> "SynonymLexicon":
        return cls([line.split() for line in text.splitlines() if line.split()])

    @classmethod
    def from_file(cls, path) -> "SynonymLexicon":
        with open(path, encoding="utf-8") as f:
            return cls.from_text(f.read())

    def synonymous(self, a: str, b: str) -> bool:
        ia = self._ids.get(a)
        return bool(ia) and not ia.isdisjoint(self._ids.get(b, ()))

    def __len__(self):
        return len(self._ids)


@dataclass(frozen=True)
class MeteorConfig:
    alpha: float = 0.85
    beta: float = 0.2
    gamma: float = 0.6
    stages: Tuple[str, ...] = STAGES
    synonyms: Optional[SynonymLexicon] = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "stages", tuple(self.stages))
        if not 0.0 <= self.alpha <= 1.0:
            raise ValueError("alpha must lie in [0, 1]")
        if self.beta < 0:
            raise ValueError("beta must be non-negative")
        if not 0.0 <= self.gamma <= 1.0:
            raise ValueError("gamma must lie in [0, 1]")
        if not self.stages or self.stages[0] != EXACT:
            raise ValueError("stage list must start with 'exact'")
        if len(set(self.stages)) != len(self.stages) or not set(self.stages) <= set(STAGES):
            raise ValueError(f"stages must be distinct members of {STAGES}")

    def active_stages(self) -> Tuple[str, ...]:
        # synonym stage is disabled without a lexicon
        return tuple(s for s in self.stages if s != SYNONYM or self.synonyms is not None)


@dataclass(frozen=True)
class Alignment:
    matches: Tuple[Tuple[int, int, str], ...]
    chunk_count: int

    def __len__(self):
        return len(self.matches)


def count_chunks(pairs) -> int:
    """Number of maximal runs contiguous and in order on both sides."""
    pairs = sorted((h, r) for h, r, *_ in pairs)
    chunks = 0
    prev = None
    for h, r in pairs:
        if prev is None or h != prev[0] + 1 or r != prev[1] + 1:
            chunks += 1
        prev = (h, r)
    return chunks


def _stage_matcher(stage: str, cfg: MeteorConfig):
    if stage == EXACT:
        return lambda a, b: a == b
    if stage == STEM:
        return lambda a, b: stem(a) == stem(b)
    lex = cfg.synonyms
    return lambda a, b: a == b or lex.synonymous(a, b)


def _max_matching_size(edges: Dict[int, List[int]]) -> int:
    """Maximum bipartite matching size by augmenting paths (Kuhn)."""
    owner: Dict[int, int] = {}

    def augment(h, seen):
        for r in edges[h]:
            if r in seen:
                continue
            seen.add(r)
            if r not in owner or augment(owner[r], seen):
                owner[r] = h
                return True
        return False

    return sum(augment(h, set()) for h in edges)


def _forced_edges(edges: Dict[int, List[int]]):
    """Split edges into isolated one-to-one pairs and the ambiguous rest."""
    ref_deg: Dict[int, int] = {}
    for rs in edges.values():
        for r in rs:
            ref_deg[r] = ref_deg.get(r, 0) + 1
    forced = {h: rs[0] for h, rs in edges.items() if len(rs) == 1 and ref_deg[rs[0]] == 1}
    ambiguous = {h: rs for h, rs in edges.items() if h not in forced}
    return forced, ambiguous


def _links(assign: Dict[int, int]) -> int:
    return sum(1 for h, r in assign.items() if assign.get(h + 1) == r + 1)


def _solve_stage(fixed: Dict[int, int], edges: Dict[int, List[int]]) -> Dict[int, int]:
    """Pick a maximum matching over ``edges`` minimizing chunks with ``fixed``.

    Returns the chosen hyp -> ref assignments for this stage only.
    """
    if not edges:
        return {}
    forced, ambiguous = _forced_edges(edges)
    base = dict(fixed)
    base.update(forced)
    order = sorted(ambiguous)
    if len(order) <= EXHAUSTIVE_LIMIT:
        best = _exhaustive(order, ambiguous, base)
    else:
        best = _beam(order, ambiguous, base)
    chosen = dict(forced)
    chosen.update(best)
    return chosen


def _exhaustive(order, ambiguous, base):
    # DP over ambiguous hyp positions left to right; state is the set of
    # refs taken so far plus the ref given to the previous hyp position.
    amb_refs = sorted({r for rs in ambiguous.values() for r in rs})
    bit = {r: 1 << k for k, r in enumerate(amb_refs)}
    base_used = 0
    for r in base.values():
        base_used |= bit.get(r, 0)

    def gain(h, r, prev_r):
        g = 0
        left = base.get(h - 1, prev_r)
        if left is not None and left == r - 1:
            g += 1
        if base.get(h + 1) == r + 1:
            g += 1
        return g

    @lru_cache(maxsize=None)
    def best(k, used, prev_r):
        # returns (matched, links, assignments) maximal in (matched, links)
        if k == len(order):
            return 0, 0, ()
        h = order[k]
        adjacent = k + 1 < len(order) and order[k + 1] == h + 1
        top = None
        for r in ambiguous[h]:
            if used & bit[r]:
                continue
            m, l, a = best(k + 1, used | bit[r], r if adjacent else None)
            cand = (m + 1, l + gain(h, r, prev_r), ((h, r),) + a)
            if top is None or cand[:2] > top[:2]:
                top = cand
        m, l, a = best(k + 1, used, None)
        if top is None or (m, l) > top[:2]:
            top = (m, l, a)
        return top

    return dict(best(0, base_used, None)[2])


def _beam(order, ambiguous, base):
    beam = [(0, ())]  # (matched, assignments)
    for k, h in enumerate(order):
        expanded = []
        for matched, assign in beam:
            used = set(base.values()) | {r for _, r in assign}
            for r in ambiguous[h]:
                if r not in used:
                    expanded.append((matched + 1, assign + ((h, r),)))
            expanded.append((matched, assign))

        def rank(state):
            matched, assign = state
            full = dict(base)
            full.update(assign)
            return (-matched, -_links(full), assign)

        expanded.sort(key=rank)
        beam = expanded[:BEAM_WIDTH]
    return dict(beam[0][1])


def meteor_align(hyp: Sequence[str], ref: Sequence[str], cfg: MeteorConfig = MeteorConfig()) -> Alignment:
    matched: Dict[int, int] = {}
    stage_of: Dict[int, str] = {}
    for stage in cfg.active_stages():
        same = _stage_matcher(stage, cfg)
        used_refs = set(matched.values())
        edges = {}
        for i, h in enumerate(hyp):
            if i in matched:
                continue
            rs = [j for j, r in enumerate(ref) if j not in used_refs and same(h, r)]
            if rs:
                edges[i] = rs
        chosen = _solve_stage(matched, edges)
        # the beam may leave an addable pair; keep the matching maximal
        taken = set(matched.values()) | set(chosen.values())
        for i in sorted(edges):
            if i not in chosen:
                for j in edges[i]:
                    if j not in taken:
                        chosen[i] = j
                        taken.add(j)
                        break
        for i, j in chosen.items():
            matched[i] = j
            stage_of[i] = stage
    matches = tuple(sorted((i, j, stage_of[i]) for i, j in matched.items()))
    return Alignment(matches, count_chunks(matches))


def meteor_from_alignment(alignment: Alignment, hyp_len: int, ref_len: int,
                          cfg: MeteorConfig = MeteorConfig()) -> float:
    m = len(alignment.matches)
    if m == 0:
        return 0.0
    precision = m / hyp_len
    recall = m / ref_len
    fmean = precision * recall / (cfg.alpha * precision + (1 - cfg.alpha) * recall)
    penalty = cfg.gamma * (alignment.chunk_count / m) ** cfg.beta
    return 100.0 * (1 - penalty) * fmean


def meteor_single(hyp, ref, cfg: MeteorConfig = MeteorConfig()) -> float:
    return meteor_from_alignment(meteor_align(hyp, ref, cfg), len(hyp), len(ref), cfg)


def meteor_score(hyp: Sequence[str], refs: Sequence[Sequence[str]],
                 cfg: MeteorConfig = MeteorConfig()) -> float:
    """Sentence METEOR (0-100) against the best-scoring reference."""
    if not refs:
        raise ValueError("meteor_score needs at least one reference")
    return max(meteor_single(hyp, ref, cfg) for ref in refs)
