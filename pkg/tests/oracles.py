"""Independent brute-force scorers used as test oracles.

Nothing here imports the package's metric code; each oracle is written
the slow, obvious way.
"""

import itertools
import math

import numpy as np


# ---------------------------------------------------------------- BLEU

def _grams(sent, n):
    return [tuple(sent[i:i + n]) for i in range(len(sent) - n + 1)]


def naive_clip(hyp, refs, n):
    hg = _grams(hyp, n)
    credit = 0
    for g in set(hg):
        mine = hg.count(g)
        best = max(_grams(r, n).count(g) for r in refs)
        credit += min(mine, best)
    return credit, len(hg)


def naive_bleu(hyps, refs, max_order=4):
    """Corpus BLEU-1..max_order, products instead of logs."""
    correct = [0] * max_order
    guess = [0] * max_order
    hlen = rlen = 0
    for h, rs in zip(hyps, refs):
        hlen += len(h)
        lens = sorted(len(r) for r in rs)
        diffs = [abs(l - len(h)) for l in lens]
        rlen += lens[diffs.index(min(diffs))]  # sorted, so first hit is the shorter
        for n in range(1, max_order + 1):
            c, t = naive_clip(h, rs, n)
            correct[n - 1] += c
            guess[n - 1] += t
    bp = 1.0 if hlen >= rlen else math.exp(1 - rlen / hlen)
    out = []
    for k in range(1, max_order + 1):
        prod = 1.0
        for n in range(k):
            prod *= correct[n] / guess[n] if guess[n] else 0.0
        out.append(100 * bp * prod ** (1.0 / k))
    return out


# ---------------------------------------------------------------- LCS

def is_subsequence(s, b):
    it = iter(b)
    return all(tok in it for tok in s)


def lcs_by_enumeration(a, b):
    """Longest subsequence of ``a`` that is also a subsequence of ``b``."""
    for r in range(len(a), -1, -1):
        for pos in itertools.combinations(range(len(a)), r):
            if is_subsequence([a[p] for p in pos], b):
                return r
    return 0


def all_sequences(alphabet, max_len):
    return [s for L in range(max_len + 1) for s in itertools.product(alphabet, repeat=L)]


def lcs_table_by_enumeration(alphabet, max_len):
    """LCS for every pair of sequences up to ``max_len``, by enumeration.

    For every sequence b we enumerate its subsequences and record which
    sequences s are contained in b (a bitset over b).  LCS(a, b) is then
    the longest subsequence s of a whose bitset contains b.
    """
    seqs = all_sequences(alphabet, max_len)
    ids = {s: i for i, s in enumerate(seqs)}
    n = len(seqs)

    def subs(seq):
        out = set()
        for r in range(len(seq) + 1):
            for pos in itertools.combinations(range(len(seq)), r):
                out.add(tuple(seq[p] for p in pos))
        return out

    sub_ids = [sorted(ids[s] for s in subs(seq)) for seq in seqs]
    contains = np.zeros((n, n), dtype=bool)  # contains[s, b]: s is a subsequence of b
    for b, ss in enumerate(sub_ids):
        contains[ss, b] = True
    packed = np.packbits(contains, axis=1)
    del contains

    lengths = np.array([len(s) for s in seqs])
    table = np.zeros((n, n), dtype=np.int8)
    for a, ss in enumerate(sub_ids):
        ss = np.asarray(ss)
        row = table[a]
        for L in range(len(seqs[a]) + 1):
            rows = ss[lengths[ss] == L]
            hit = np.bitwise_or.reduce(packed[rows], axis=0)
            row[np.unpackbits(hit, count=n).astype(bool)] = L
    return seqs, table


# ---------------------------------------------------------------- METEOR

def brute_force_alignment(hyp, ref, stage_preds):
    """Stage-by-stage: enumerate every one-to-one matching of the stage's
    candidate pairs, keep maximum cardinality, then fewest chunks.

    Returns (matches, chunks) of the best total alignment found.
    """
    fixed = {}
    for pred in stage_preds:
        used = set(fixed.values())
        pairs = [(i, j) for i in range(len(hyp)) if i not in fixed
                 for j in range(len(ref)) if j not in used and pred(hyp[i], ref[j])]
        best = None
        top = min(len({p[0] for p in pairs}), len({p[1] for p in pairs}))
        for r in range(top, -1, -1):
            for combo in itertools.combinations(pairs, r):
                hs = [p[0] for p in combo]
                rs = [p[1] for p in combo]
                if len(set(hs)) < r or len(set(rs)) < r:
                    continue
                full = dict(fixed)
                full.update(combo)
                key = (-r, chunks_of(full))
                if best is None or key < best[0]:
                    best = (key, dict(combo))
            if best is not None and best[0][0] == -r:
                break
        fixed.update(best[1])
    return len(fixed), chunks_of(fixed)


def chunks_of(assign):
    pairs = sorted(assign.items())
    chunks = 0
    for k, (h, r) in enumerate(pairs):
        if k == 0 or h != pairs[k - 1][0] + 1 or r != pairs[k - 1][1] + 1:
            chunks += 1
    return chunks


def naive_meteor(m, chunks, hyp_len, ref_len, alpha=0.85, beta=0.2, gamma=0.6):
    if m == 0:
        return 0.0
    p, r = m / hyp_len, m / ref_len
    f = p * r / (alpha * p + (1 - alpha) * r)
    return 100 * (1 - gamma * (chunks / m) ** beta) * f


# ---------------------------------------------------------------- embeddings

def naive_greedy_f(hv, rvs, baseline=0.0, hw=None, rws=None):
    """Double-loop max-cosine F with optional idf weights, max over refs."""
    def cos(u, v):
        nu = math.sqrt(sum(x * x for x in u))
        nv = math.sqrt(sum(x * x for x in v))
        if nu == 0 or nv == 0:
            return 0.0
        return sum(x * y for x, y in zip(u, v)) / (nu * nv)

    best = -float("inf")
    for k, rv in enumerate(rvs):
        hwk = hw or [1.0] * len(hv)
        rwk = (rws[k] if rws else None) or [1.0] * len(rv)
        p = sum(w * max(cos(h, r) for r in rv) for w, h in zip(hwk, hv)) / sum(hwk)
        rc = sum(w * max(cos(r, h) for h in hv) for w, r in zip(rwk, rv)) / sum(rwk)
        f = 0.0 if p + rc == 0 else 2 * p * rc / (p + rc)
        best = max(best, (f - baseline) / (1 - baseline))
    return best


# ---------------------------------------------------------------- CIDEr-D

def naive_cider_d(hyps, refs, n_max=4, sigma=6.0):
    """Dense-vector CIDEr-D over an explicit gram vocabulary."""
    num_docs = len(refs)
    scores = []
    for h, rs in zip(hyps, refs):
        per_ref = []
        for r in rs:
            total = 0.0
            for n in range(1, n_max + 1):
                vocab = sorted(set(_grams(h, n)) | set(_grams(r, n)))
                if not vocab:
                    continue

                def idf(g):
                    df = sum(1 for doc in refs if any(g in _grams(x, n) for x in doc))
                    return math.log(num_docs) - math.log(max(df, 1))

                w = np.array([idf(g) for g in vocab])
                vh = np.array([_grams(h, n).count(g) for g in vocab]) * w
                vr = np.array([_grams(r, n).count(g) for g in vocab]) * w
                nh, nr = np.linalg.norm(vh), np.linalg.norm(vr)
                if nh == 0 or nr == 0:
                    continue
                total += float(np.minimum(vh, vr) @ vr) / (nh * nr)
            pen = math.exp(-((len(h) - len(r)) ** 2) / (2 * sigma ** 2))
            per_ref.append(pen * total / n_max)
        scores.append(10 * sum(per_ref) / len(rs))
    return sum(scores) / len(scores), scores
