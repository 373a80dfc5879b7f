# %% [markdown]
# # How good are the references themselves?
#
# With C parallel reference corpora, each one in turn plays the system
# while the other C-1 serve as references.  The spread across iterations
# shows how much the metrics move when nothing about quality changes.

# %%
from metric_gauntlet import ReferenceBundle, leave_one_out, normalize_tokens
from metric_gauntlet.formatting import loo_table

corpora = [
    ["a man rides a horse", "two dogs chase a ball", "a woman chops carrots"],
    ["a person riding a horse", "dogs running after a ball", "a lady cutting vegetables"],
    ["a man on a brown horse", "two puppies play with a ball", "someone slicing carrots"],
    ["a rider on horseback", "a pair of dogs and a ball", "a woman preparing food"],
]
bundle = ReferenceBundle([[normalize_tokens(s) for s in c] for c in corpora])

# %% [markdown]
# Reference against reference:

# %%
rvr = leave_one_out(bundle)
for i, report in enumerate(rvr.per_iteration, start=1):
    print(f"R{i} as candidate: BLEU-4 {report.bleu4:6.2f}  ROUGE-L {report.rouge_l:6.2f}")

# %% [markdown]
# A system can be dropped into the same protocol so that it, too, is
# scored against only C-1 references in every iteration.

# %%
system = [normalize_tokens(s) for s in ["a man rides a horse", "two dogs play", "a woman cooks"]]
svr = leave_one_out(bundle, sys=system)
print(loo_table({"rvr": rvr.to_dict(), "svr": svr.to_dict()}))
