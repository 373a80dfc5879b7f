# %% [markdown]
# # Breaking a reference on purpose
#
# Treat the first reference corpus as a system and damage it in controlled
# ways.  A metric that barely moves when content words vanish is not
# measuring content.

# %%
from metric_gauntlet import PerturbSpec, build_vocabulary, normalize_tokens, perturb_and_score
from metric_gauntlet.formatting import perturb_table

corpora = [
    ["a man is riding a horse on the beach", "two dogs play with a ball in the grass",
     "a woman cuts vegetables in a kitchen", "a man is sitting on a bench"],
    ["a person rides a horse near the sea", "a pair of dogs chase a ball",
     "a lady is chopping carrots", "a man sits on a wooden bench"],
    ["a rider on a horse by the water", "dogs running after a ball on the lawn",
     "a woman preparing food in the kitchen", "an old man sitting on a park bench"],
]
r1, *others = [[normalize_tokens(s) for s in c] for c in corpora]
held_out = [list(refs) for refs in zip(*others)]

# %% [markdown]
# Targeted substitution of the most frequent words:

# %%
spec = PerturbSpec("targeted", targets=("a", "man"))
print(perturb_table(perturb_and_score(r1, held_out, spec).to_dict()))

# %% [markdown]
# Vocabulary thresholding: anything seen fewer than T times in a training
# corpus becomes UNK.  T=1 is the untouched corpus.

# %%
train = [normalize_tokens(s) for s in ["a man on a horse", "a dog with a ball", "a man on a bench"]]
vocab = build_vocabulary(train)
for t in (1, 2, 3):
    out = perturb_and_score(r1, held_out, PerturbSpec("threshold", threshold=t), vocab)
    print(f"T={t}: {out.substitution_fraction:6.1%} UNK, "
          f"BLEU-4 {out.report_after.bleu4:6.2f}, CIDEr-D {out.report_after.cider_d:.3f}")

# %% [markdown]
# Random content words, seeded so the draw can be repeated.

# %%
stop = frozenset(["a", "an", "the", "on", "in", "is", "with", "of", "by"])
spec = PerturbSpec("random_content", target_fraction=0.3, seed=7, stoplist=stop)
out = perturb_and_score(r1, held_out, spec)
print(" | ".join(" ".join(s) for s in out.perturbed))
print(f"deltas: BLEU-4 {out.deltas.bleu4:+.2f}  METEOR {out.deltas.meteor:+.2f}")
