"""
Cross-checks over the seeded random corpus and the named constructions:
the three exact checkers agree, the AB test never contradicts them, and
minimality is invariant under column scaling, column permutation and
adding columns.
"""

import numpy as np

from mincodes.models.code import DefiningSet
from mincodes.models.vector import Vector
from mincodes.services.code_service import CodeService
from mincodes.services.corpus_service import CorpusService
from mincodes.services.linalg_service import LinalgService
from mincodes.services.minimality_service import MinimalityService
from mincodes.utils.constants import Family


def test_corpus_has_both_verdicts(corpus):
    verdicts = {MinimalityService.check_span(D).minimal for D in corpus}
    assert verdicts == {True, False}


def test_exact_checkers_agree_on_corpus(corpus):
    for i, D in enumerate(corpus):
        span, dhz, brute, ab = MinimalityService.check_all(D)
        assert span.minimal == dhz.minimal == brute.minimal, f"sample {i}"
        if ab.minimal is True:
            assert span.minimal is True, f"sample {i}"


def test_ab_is_inconclusive_somewhere_minimal(corpus):
    named = [D for _, D in CorpusService.named_constructions()]
    hits = [
        D for D in corpus + named
        if MinimalityService.check_ab(D).inconclusive and MinimalityService.check_span(D).minimal is True
    ]
    assert hits


def test_codeword_criteria_agree_on_corpus(corpus):
    for D in corpus[:80]:
        for y in LinalgService.projective_points(D.k, D.field):
            by_span, _ = MinimalityService.check_codeword_span(y, D)
            assert by_span == MinimalityService.check_codeword_brute(y, D)
            assert by_span == MinimalityService.check_codeword_hyperplane(y, D)


def test_witnesses_check_out(corpus):
    for D in corpus:
        verdict = MinimalityService.check_span(D)
        if verdict.minimal:
            continue
        y = verdict.witness.y
        assert not MinimalityService.check_codeword_span(y, D)[0]
        x = verdict.witness.covering_x
        assert LinalgService.is_independent(x, y)
        assert not MinimalityService.check_codeword_brute(y, D)


def test_pair_witnesses_read_the_same_way(corpus):
    for D in corpus[:80]:
        dhz = MinimalityService.check_dhz(D)
        if dhz.minimal:
            continue
        brute = MinimalityService.check_brute(D)
        for w in (dhz.witness, brute.witness):
            assert LinalgService.is_independent(w.x, w.y)
            assert CodeService.covers(CodeService.encode(w.x, D), CodeService.encode(w.y, D))
        assert MinimalityService.dhz_pair(dhz.witness.y, dhz.witness.x, D) == (dhz.witness.lhs, dhz.witness.rhs)


def test_column_scaling_and_permutation_keep_the_verdict(corpus):
    rng = np.random.default_rng(11)
    for D in corpus[:60]:
        expected = MinimalityService.check_span(D).minimal
        cols = [c.scale(int(rng.integers(1, D.q))) for c in D.columns]
        order = rng.permutation(D.n)
        shuffled = DefiningSet(tuple(cols[i] for i in order), D.field, D.k)
        assert MinimalityService.check_span(shuffled).minimal == expected


def test_adding_columns_keeps_minimality(corpus):
    rng = np.random.default_rng(5)
    for D in corpus:
        if not MinimalityService.check_span(D).minimal:
            continue
        extra = [Vector(tuple(r), D.field) for r in rng.integers(0, D.q, size=(3, D.k)).tolist()]
        assert MinimalityService.check_span(D.with_columns(extra)).minimal


def test_counting_identity_on_zero_free_corpus(corpus):
    checked = 0
    for D in corpus:
        if D.zero_columns():
            continue
        lhs, rhs = MinimalityService.counting_identity(D)
        assert lhs == rhs
        checked += 1
    assert checked > 0


def test_named_constructions_are_minimal():
    for params, D in CorpusService.named_constructions():
        assert MinimalityService.check_span(D).minimal is True, params


def test_counting_identity_on_named_constructions():
    families = set()
    for params, D in CorpusService.named_constructions():
        if D.zero_columns():
            continue
        lhs, rhs = MinimalityService.counting_identity(D)
        assert lhs == rhs, params
        families.add(params.family)
    assert families == {Family.D0, Family.WT2, *Family.SPLIT}
