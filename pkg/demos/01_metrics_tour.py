# %% [markdown]
# # A tour of the metrics
#
# Five metrics on a tiny captioning corpus.  Everything here is
# whitespace-tokenized; the library never re-tokenizes.

# %%
import numpy as np

from metric_gauntlet import (EmbeddedSentence, bleu_corpus, cider_d, greedy_embed_fscore,
                             meteor_align, meteor_score, normalize_tokens, rouge_l, score_all)

refs = [
    ["a man is riding a horse on the beach", "a person rides a brown horse near the sea"],
    ["two dogs play with a ball in the grass", "a pair of dogs chase a ball"],
    ["a woman cuts vegetables in a kitchen", "a lady is chopping carrots"],
]
hyps = ["a man rides a horse on a beach", "two dogs are playing in the grass", "a woman is cooking"]
refs = [[normalize_tokens(r) for r in rs] for rs in refs]
hyps = [normalize_tokens(h) for h in hyps]

# %% [markdown]
# BLEU is a corpus statistic: clipped n-gram counts and lengths are summed
# over every instance before the geometric mean is taken.

# %%
for k, score in enumerate(bleu_corpus(hyps, refs), start=1):
    print(f"BLEU-{k}: {score:6.2f}")

# %% [markdown]
# METEOR aligns words in stages (exact, then Porter stem), preferring
# alignments with fewer contiguous chunks.  Here "rides" reaches "riding"
# only through the stemmer.

# %%
alignment = meteor_align(hyps[0], refs[0][0])
for h, r, stage in alignment.matches:
    print(f"{hyps[0][h]:>8} -> {refs[0][0][r]:<8} ({stage})")
print("chunks:", alignment.chunk_count)
print("METEOR, first instance:", round(meteor_score(hyps[0], refs[0]), 2))

# %% [markdown]
# ROUGE-L takes the best reference; CIDEr-D weights n-grams by how rare
# they are across the reference sets and so lives on a 0-10 scale.

# %%
print("ROUGE-L per instance:", [round(rouge_l(h, r), 2) for h, r in zip(hyps, refs)])
print("CIDEr-D:", round(cider_d(hyps, refs), 3))

# %% [markdown]
# The embedding F-score needs token vectors from outside.  Random vectors
# stand in for a real encoder; a shared table keeps identical words identical.

# %%
rng = np.random.default_rng(0)
table = {}


def embed(sentence):
    vecs = [table.setdefault(t, rng.normal(size=16)) for t in sentence]
    return EmbeddedSentence(sentence, np.array(vecs))


print("embedding F:", round(greedy_embed_fscore(embed(hyps[0]), [embed(r) for r in refs[0]]), 3))

# %% [markdown]
# `score_all` bundles everything into one report.

# %%
report = score_all(hyps, refs, hyp_embeddings=[embed(h) for h in hyps],
                   ref_embeddings=[[embed(r) for r in rs] for rs in refs])
for name, value in report.scores().items():
    print(f"{name:>8}: {value:.3f}")
