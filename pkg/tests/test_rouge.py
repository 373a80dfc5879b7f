import random

import pytest

from conftest import random_sentence, toks
from metric_gauntlet.metrics.rouge import LcsColumns, lcs_length, rouge_l, rouge_l_single
from oracles import lcs_by_enumeration


def test_lcs_examples():
    assert lcs_by_enumeration("abc", "acb") == 2
    assert lcs_length(("a", "b", "c"), ("a", "c", "b")) == 2
    s = toks("a b c d")
    assert lcs_length(s, s) == 4
    assert lcs_length(s, toks("x y")) == 0
    assert lcs_length((), s) == 0


def test_lcs_random_vs_enumeration():
    rng = random.Random(3)
    for _ in range(3000):
        a = random_sentence(rng, 9, "abcd", min_len=0)
        b = random_sentence(rng, 9, "abcd", min_len=0)
        assert lcs_length(a, b) == lcs_by_enumeration(a, b)


def test_lcs_columns_match_scalar():
    rng = random.Random(8)
    rows = [random_sentence(rng, 9, "abcd", min_len=0) for _ in range(60)]
    for _ in range(40):
        b = random_sentence(rng, 9, "abcde", min_len=0)
        state = LcsColumns(rows)
        for k, tok in enumerate(b, start=1):
            state = state.extend(tok)
            assert state.lengths.tolist() == [lcs_length(r, b[:k]) for r in rows]


def test_lcs_columns_states_are_independent():
    base = LcsColumns([toks("a b"), ()])
    assert base.lengths.tolist() == [0, 0]
    left, right = base.extend("a"), base.extend("b")
    assert left.extend("b").lengths.tolist() == [2, 0]
    assert right.extend("a").lengths.tolist() == [1, 0]
    assert base.lengths.tolist() == [0, 0]


def test_rouge_l_hand_value():
    # lcs=2, R=1/3, P=2/3
    r, p, b2 = 1 / 3, 2 / 3, 1.2 ** 2
    expected = 100 * (1 + b2) * r * p / (r + b2 * p)
    got = rouge_l(toks("the cat sat"), [toks("the cat is on the mat")], 1.2)
    assert got == pytest.approx(expected, abs=1e-12)
    assert got == pytest.approx(41.93, abs=0.01)


def test_rouge_l_identity_and_zero():
    s = toks("a b c")
    assert rouge_l(s, [s]) == 100.0
    assert rouge_l(s, [toks("x y")]) == 0.0


def test_rouge_l_max_over_refs():
    rng = random.Random(11)
    for _ in range(200):
        hyp = random_sentence(rng, 10, "abcde")
        refs = [random_sentence(rng, 10, "abcde") for _ in range(rng.randint(1, 5))]
        assert rouge_l(hyp, refs) == max(rouge_l_single(hyp, r) for r in refs)


def test_rouge_l_validation():
    with pytest.raises(ValueError):
        rouge_l(("a",), [])
    with pytest.raises(ValueError):
        rouge_l(("a",), [("a",)], beta=0)
