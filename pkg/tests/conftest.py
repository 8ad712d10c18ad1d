import sys, os, pathlib

ROOT = pathlib.Path(__file__).resolve().parents[1]
sys.path.insert(0, str(ROOT))

import pytest
from click.testing import CliRunner

from mincodes import create_cli
from mincodes.models.code import DefiningSet
from mincodes.services.corpus_service import DEFAULT_SEED, CorpusService
from mincodes.services.field_service import FieldService


@pytest.fixture(autouse=True)
def mincodes_test_env(monkeypatch):
    """
    Mark every test as running under MINCODES_ENV=test: progress bars stay
    off and settings ignore whatever the developer's shell exports.
    """
    monkeypatch.setenv("MINCODES_ENV", "test")
    for name in ("MINCODES_JOBS", "MINCODES_NODE_BUDGET", "MINCODES_TZ", "MINCODES_LOG_LEVEL", "MINCODES_PROGRESS"):
        monkeypatch.delenv(name, raising=False)
    yield


@pytest.fixture
def gf2():
    return FieldService.make_field(2)


@pytest.fixture
def gf3():
    return FieldService.make_field(3)


@pytest.fixture
def gf4():
    return FieldService.make_field(2, 2)


@pytest.fixture
def gf5():
    return FieldService.make_field(5)


@pytest.fixture
def make_set():
    """Factory: rows of coordinates -> DefiningSet over the given field."""
    def _make(rows, spec, k=None):
        return DefiningSet.from_rows(rows, spec, k)

    return _make


@pytest.fixture(scope="session")
def corpus():
    """The seeded random corpus shared by the cross-checking tests."""
    return CorpusService.random_corpus(DEFAULT_SEED, 200)


@pytest.fixture
def runner():
    """
    Click test runner plus a fresh CLI group; stderr is kept apart so tests
    can assert on diagnostics and on clean stdout separately.
    """
    try:
        cli_runner = CliRunner(mix_stderr=False)
    except TypeError:  # click >= 8.2 always keeps stderr apart
        cli_runner = CliRunner()
    return cli_runner, create_cli()
