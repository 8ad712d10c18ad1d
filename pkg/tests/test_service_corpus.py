"""
Unit tests for CorpusService: the seeded random corpus is reproducible and
full-rank, and seeding/clearing a corpus directory writes files that read
back to the same defining sets.
"""

import numpy as np

from mincodes.services.corpus_service import CorpusService
from mincodes.services.io_service import IOService
from mincodes.services.linalg_service import LinalgService
from mincodes.utils.constants import Family


def test_random_corpus_is_reproducible():
    a = CorpusService.random_corpus(seed=3, samples=25)
    b = CorpusService.random_corpus(seed=3, samples=25)
    assert a == b
    assert a != CorpusService.random_corpus(seed=4, samples=25)


def test_random_corpus_shapes(corpus):
    assert len(corpus) == 200
    for D in corpus:
        assert D.q in (2, 3, 4)
        assert D.k in (2, 3, 4)
        assert D.k <= D.n <= 10
        assert LinalgService.rank(D.columns) == D.k


def test_random_defining_set_has_full_rank():
    rng = np.random.default_rng(0)
    for _ in range(20):
        D = CorpusService.random_defining_set(rng, 2, 4, 4)
        assert LinalgService.rank(D.columns) == 4


def test_named_constructions_cover_every_family():
    families = {params.family for params, _ in CorpusService.named_constructions()}
    assert families == set(Family.CHOICES)


def test_seed_and_clear_corpus(tmp_path):
    directory = tmp_path / "corpus"
    written = CorpusService.seed_corpus(directory, seed=9, samples=4)
    named = CorpusService.named_constructions()
    assert len(written) == len(named) + 4
    names = {p.name for p in written}
    assert "d0_k3_q2.txt" in names
    assert "d3_k5_t3_q3.txt" in names
    assert "random_0003.txt" in names

    text = (directory / "d0_k3_q2.txt").read_text(encoding="utf-8")
    assert text.startswith("# family: d0\n")
    assert IOService.read_defining_set(directory / "random_0000.txt") == CorpusService.random_corpus(9, 4)[0]

    assert CorpusService.clear_corpus(directory) == len(written)
    assert not list(directory.glob("*.txt"))
    assert CorpusService.clear_corpus(tmp_path / "missing") == 0
