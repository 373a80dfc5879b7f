# %% [markdown]
# # One sentence for every image
#
# Pick a single training sentence and output it for every test instance.
# The best such sentence can score surprisingly well on corpus BLEU, since
# common n-grams pile up matches across the whole test set.

# %%
import random
import time

from metric_gauntlet import search_representative_sentence
from metric_gauntlet.formatting import search_row

rng = random.Random(0)
subjects = ["a man", "a woman", "two dogs", "a child", "a group of people"]
verbs = ["is sitting on", "is standing near", "are playing in", "is walking along"]
places = ["a bench", "the beach", "a park", "the street", "a field of grass"]


def caption():
    return tuple(f"{rng.choice(subjects)} {rng.choice(verbs)} {rng.choice(places)}".split())


train = [caption() for _ in range(3000)]
test_refs = [[caption() for _ in range(5)] for _ in range(300)]

# %% [markdown]
# The fast path never builds the copied corpus; it looks up per-instance
# reference counts with bisection.  The naive path scores each candidate
# the obvious way and returns the same winner.

# %%
for naive in (False, True):
    start = time.perf_counter()
    result = search_representative_sentence(train, test_refs, "bleu4", naive=naive)
    label = "naive" if naive else "fast"
    print(f"{label:>5}: {time.perf_counter() - start:.2f}s over {result.candidates_evaluated} candidates")
print(search_row(result.to_dict()))
