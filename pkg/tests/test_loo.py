import random

import pytest

from conftest import random_sentence
from metric_gauntlet.corpus import ReferenceBundle
from metric_gauntlet.errors import RaggedReferences
from metric_gauntlet.metrics import SCORE_FIELDS, mean_report, sd_report
from metric_gauntlet.probes import LooResult, leave_one_out


def bundle(rng, c=3, n=6):
    return ReferenceBundle([[random_sentence(rng, 10, "abcdefg", min_len=4) for _ in range(n)]
                            for _ in range(c)])


def test_identical_corpora_ceiling():
    rng = random.Random(0)
    corpus = [random_sentence(rng, 10, "abcdefgh", min_len=4) for _ in range(5)]
    res = leave_one_out(ReferenceBundle([corpus] * 3))
    assert res.mean.bleu4 == 100.0 and res.sd.bleu4 == 0.0
    assert res.mean.rouge_l == 100.0 and res.sd.rouge_l == 0.0


def test_disjoint_corpora_zero():
    r1 = [("a", "b", "c", "d"), ("e", "f", "g", "h")]
    r2 = [("w", "x", "y", "z"), ("s", "t", "u", "v")]
    res = leave_one_out(ReferenceBundle([r1, r2]))
    assert res.mean.bleu1 == 0.0 and res.mean.bleu4 == 0.0


def test_svr_with_first_corpus_matches_rvr_iteration():
    rng = random.Random(1)
    b = bundle(rng)
    rvr = leave_one_out(b)
    svr = leave_one_out(b, sys=b.corpora[0])
    assert svr.per_iteration[0].scores() == rvr.per_iteration[0].scores()


def test_mean_sd_recomputable():
    rng = random.Random(2)
    res = leave_one_out(bundle(rng, c=4))
    assert len(res.per_iteration) == 4
    m, s = mean_report(res.per_iteration), sd_report(res.per_iteration)
    for f in SCORE_FIELDS:
        if getattr(m, f) is not None:
            assert getattr(res.mean, f) == pytest.approx(getattr(m, f), rel=1e-9)
            assert getattr(res.sd, f) == pytest.approx(getattr(s, f), rel=1e-9, abs=1e-12)


def test_json_roundtrip():
    rng = random.Random(3)
    res = leave_one_out(bundle(rng))
    again = LooResult.from_dict(res.to_dict())
    assert again.to_dict() == res.to_dict()


def test_errors():
    rng = random.Random(4)
    with pytest.raises(RaggedReferences):
        leave_one_out(bundle(rng, c=1))
    with pytest.raises(RaggedReferences):
        leave_one_out(bundle(rng), sys=[("a",)])
    with pytest.raises(RaggedReferences):
        ReferenceBundle([[("a",)], [("a",), ("b",)]])
