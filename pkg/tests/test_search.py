import random

import pytest

from conftest import random_sentence, toks
from metric_gauntlet.errors import EmptyCorpus
from metric_gauntlet.probes import (BleuSearchIndex, score_fixed_hypothesis,
                                    search_representative_sentence)
from metric_gauntlet.metrics.bleu import bleu_stats
from oracles import naive_bleu

TOY_REFS = [[toks("a b")], [toks("a c")]]


def naive_search(train, refs, objective, eps=1e-7):
    """Exhaustive argmax with the documented tie-break."""
    from metric_gauntlet.metrics import BleuConfig, ScoreConfig
    cfg = ScoreConfig(bleu=BleuConfig(4, eps))
    best = None
    for s in {tuple(x) for x in train}:
        score = score_fixed_hypothesis(s, refs, objective, cfg)
        key = (-score, len(s), s)
        if best is None or key < best:
            best = key
    return best[2], -best[0]


def test_fixed_hypothesis_toy():
    assert score_fixed_hypothesis(toks("a b"), TOY_REFS, "bleu1") == 75.0
    assert score_fixed_hypothesis(toks("c d"), TOY_REFS, "bleu1") == 25.0
    assert naive_bleu([toks("a b")] * 2, TOY_REFS, 1)[0] == pytest.approx(75.0)


def test_fixed_hypothesis_identity_and_disjoint():
    refs = [[toks("x y z")], [toks("x y z")]]
    assert score_fixed_hypothesis(toks("x y z"), refs, "bleu1") == 100.0
    assert score_fixed_hypothesis(toks("p q"), refs, "bleu4") == 0.0


@pytest.mark.parametrize("naive", [False, True])
def test_toy_search(naive):
    res = search_representative_sentence([toks("a b"), toks("c d")], TOY_REFS, "bleu1", naive=naive)
    assert res.sentence == toks("a b") and res.objective_score == 75.0
    assert res.candidates_evaluated == 2
    assert res.full_report.bleu1 == 75.0


def test_identity_winner():
    refs = [[toks("a man is playing")]] * 4
    train = [toks("a man is playing"), toks("a woman"), toks("dogs run")]
    res = search_representative_sentence(train, refs, "bleu1")
    assert res.sentence == toks("a man is playing") and res.objective_score == 100.0


def test_index_stats_equal_naive_stats():
    rng = random.Random(5)
    for _ in range(30):
        refs = [[random_sentence(rng, 8, "abcdef") for _ in range(rng.randint(1, 4))]
                for _ in range(rng.randint(1, 20))]
        index = BleuSearchIndex(refs)
        for _ in range(20):
            s = random_sentence(rng, 8, "abcdefg")
            assert index.stats(s) == bleu_stats([s] * len(refs), refs)


def test_fast_equals_naive_random():
    rng = random.Random(6)
    for _ in range(15):
        refs = [[random_sentence(rng, 8, "abcdef") for _ in range(rng.randint(1, 4))]
                for _ in range(rng.randint(1, 15))]
        train = [random_sentence(rng, 8, "abcdef") for _ in range(rng.randint(1, 60))]
        for objective in ("bleu1", "bleu4"):
            fast = search_representative_sentence(train, refs, objective)
            slow = search_representative_sentence(train, refs, objective, naive=True)
            want = naive_search(train, refs, objective)
            assert fast.sentence == slow.sentence == want[0]
            assert fast.search_score == slow.search_score == want[1]
            assert fast.objective_score == slow.objective_score


def test_objective_score_rescores_winner():
    rng = random.Random(7)
    refs = [[random_sentence(rng, 8, "abcdef") for _ in range(3)] for _ in range(10)]
    train = [random_sentence(rng, 8, "abcdef") for _ in range(40)]
    res = search_representative_sentence(train, refs, "bleu4")
    assert res.objective_score == score_fixed_hypothesis(res.sentence, refs, "bleu4")


def test_tie_break_shorter_then_lexicographic():
    refs = [[toks("a")], [toks("b")]]
    # "b" and "a" both score BLEU-1 50; "a b" scores the same with a longer candidate
    res = search_representative_sentence([toks("b"), toks("a b"), toks("a")], refs, "bleu1")
    assert score_fixed_hypothesis(toks("a b"), refs, "bleu1") == 50.0
    assert res.sentence == ("a",) and res.objective_score == 50.0


def test_pool_monotone():
    rng = random.Random(8)
    refs = [[random_sentence(rng, 8, "abcdef") for _ in range(3)] for _ in range(10)]
    train = [random_sentence(rng, 8, "abcdef") for _ in range(50)]
    prev = -1.0
    for k in range(5, 51, 5):
        score = search_representative_sentence(train[:k], refs, "bleu2").search_score
        assert score >= prev
        prev = score


@pytest.mark.parametrize("objective", ["meteor", "rouge_l", "cider_d"])
def test_non_bleu_objectives(objective):
    rng = random.Random(9)
    refs = [[random_sentence(rng, 6, "abcde") for _ in range(3)] for _ in range(5)]
    train = [random_sentence(rng, 6, "abcde") for _ in range(15)]
    res = search_representative_sentence(train, refs, objective)
    best = max(score_fixed_hypothesis(tuple(s), refs, objective) for s in train)
    assert res.objective_score == best


def test_worker_count_does_not_change_result():
    rng = random.Random(10)
    refs = [[random_sentence(rng, 8, "abcdef") for _ in range(3)] for _ in range(10)]
    train = [random_sentence(rng, 8, "abcdef") for _ in range(200)]
    one = search_representative_sentence(train, refs, "bleu4", workers=1)
    two = search_representative_sentence(train, refs, "bleu4", workers=2)
    assert one.to_dict() == two.to_dict()


def test_errors():
    with pytest.raises(EmptyCorpus):
        search_representative_sentence([], TOY_REFS)
    with pytest.raises(ValueError):
        search_representative_sentence([toks("a")], TOY_REFS, "bogus")
