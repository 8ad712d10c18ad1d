from __future__ import annotations

import logging
from pathlib import Path

import numpy as np

from mincodes.models.code import DefiningSet
from mincodes.models.construction import ConstructionParams
from mincodes.services.construction_service import ConstructionService
from mincodes.services.field_service import FieldService
from mincodes.services.io_service import IOService
from mincodes.services.linalg_service import LinalgService
from mincodes.utils.constants import Family

logger = logging.getLogger("mincodes.corpus")

DEFAULT_SEED = 20190601
DEFAULT_SAMPLES = 200


class CorpusService:
    """Seeded random defining sets plus the named constructions, on disk or in memory."""

    @staticmethod
    def random_defining_set(rng: np.random.Generator, q: int, k: int, n: int) -> DefiningSet:
        """Uniform columns of F_q^k (zero allowed), redrawn until the rank is k."""
        spec = FieldService.field_of_order(q)
        while True:
            rows = rng.integers(0, q, size=(n, k)).tolist()
            D = DefiningSet.from_rows(rows, spec, k)
            if LinalgService.rank(D.columns) == k:
                return D

    @staticmethod
    def random_corpus(seed: int = DEFAULT_SEED, samples: int = DEFAULT_SAMPLES, q_values=(2, 3, 4),
                      k_values=(2, 3, 4), n_max: int = 10) -> list[DefiningSet]:
        rng = np.random.default_rng(seed)
        corpus = []
        for _ in range(samples):
            q = int(rng.choice(q_values))
            k = int(rng.choice(k_values))
            n = int(rng.integers(k, max(k, n_max) + 1))
            corpus.append(CorpusService.random_defining_set(rng, q, k, n))
        return corpus

    @staticmethod
    def named_constructions() -> list[tuple[ConstructionParams, DefiningSet]]:
        """Every named family at small parameters, in a fixed order."""
        out = []
        for q in (2, 3):
            spec = FieldService.field_of_order(q)
            for k in (1, 2, 3):
                out.append(ConstructionParams(Family.FULL, k, spec))
        for q in (2, 3, 4):
            spec = FieldService.field_of_order(q)
            for k in (2, 3, 4):
                out.append(ConstructionParams(Family.D0, k, spec))
                out.append(ConstructionParams(Family.WT2, k, spec))
        for q in (2, 3):
            spec = FieldService.field_of_order(q)
            for k in (3, 4, 5):
                for t in range(k // 2 + 1, k):
                    for family in Family.SPLIT:
                        out.append(ConstructionParams(family, k, spec, t))
        return [(params, ConstructionService.build(params)) for params in out]

    @staticmethod
    def seed_corpus(directory: str | Path, seed: int = DEFAULT_SEED, samples: int = DEFAULT_SAMPLES) -> list[Path]:
        """Write the named constructions and a seeded random corpus as defining-set files."""
        directory = Path(directory)
        written = []
        for params, D in CorpusService.named_constructions():
            t = f"_t{params.t}" if params.t is not None else ""
            name = f"{params.family}_k{params.k}{t}_q{params.field.q}.txt"
            manifest = ConstructionService.manifest(params, D)
            written.append(IOService.write_defining_set(D, directory / name, manifest))
        for i, D in enumerate(CorpusService.random_corpus(seed, samples)):
            manifest = {"family": "random", "seed": seed, "sample": i}
            written.append(IOService.write_defining_set(D, directory / f"random_{i:04d}.txt", manifest))
        logger.info("wrote %d corpus files to %s", len(written), directory)
        return written

    @staticmethod
    def clear_corpus(directory: str | Path) -> int:
        directory = Path(directory)
        if not directory.exists():
            return 0
        removed = 0
        for path in directory.glob("*.txt"):
            path.unlink()
            removed += 1
        logger.info("removed %d corpus files from %s", removed, directory)
        return removed
