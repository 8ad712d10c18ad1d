"""Runtime settings read from MINCODES_* environment variables."""

from __future__ import annotations

import os
from dataclasses import dataclass
from pathlib import Path

from mincodes.utils.constants import DEFAULT_NODE_BUDGET

# ---- Paths ----
BASE_DIR = Path(__file__).resolve().parents[1]
DEFAULT_CORPUS_DIR = BASE_DIR / "corpus"


def _int_env(name: str, default: int) -> int:
    raw = (os.getenv(name) or "").strip().replace("_", "")
    if not raw:
        return default
    try:
        return int(raw)
    except ValueError:
        return default


@dataclass(frozen=True)
class Settings:
    env: str = "production"
    node_budget: int = DEFAULT_NODE_BUDGET
    jobs: int = 1
    timezone: str = "UTC"
    log_level: str = "WARNING"
    corpus_dir: Path = DEFAULT_CORPUS_DIR

    @property
    def testing(self) -> bool:
        return self.env == "test"

    @classmethod
    def from_env(cls) -> "Settings":
        """Build settings from the environment, falling back to defaults on bad values."""
        return cls(
            env=(os.getenv("MINCODES_ENV") or "production").strip().lower(),
            node_budget=max(1, _int_env("MINCODES_NODE_BUDGET", DEFAULT_NODE_BUDGET)),
            jobs=max(1, _int_env("MINCODES_JOBS", 1)),
            timezone=(os.getenv("MINCODES_TZ") or "UTC").strip(),
            log_level=(os.getenv("MINCODES_LOG_LEVEL") or "WARNING").strip().upper(),
            corpus_dir=Path(os.getenv("MINCODES_CORPUS_DIR") or DEFAULT_CORPUS_DIR),
        )
