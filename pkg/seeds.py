"""
seeds.py
--------
Writes the defining-set corpus used for regression checks: every named
construction at small parameters plus a seeded random corpus.

Usage:
    $ python seeds.py [--seed N] [--samples N]

The target directory is MINCODES_CORPUS_DIR (default: ./corpus).
"""

import click

from mincodes.config import Settings
from mincodes.services.corpus_service import DEFAULT_SAMPLES, DEFAULT_SEED, CorpusService
from mincodes.utils.log import configure_logging


@click.command()
@click.option("--seed", type=int, default=DEFAULT_SEED, show_default=True)
@click.option("--samples", type=click.IntRange(min=0), default=DEFAULT_SAMPLES, show_default=True)
def main(seed, samples):
    settings = Settings.from_env()
    configure_logging(settings.log_level)
    paths = CorpusService.seed_corpus(settings.corpus_dir, seed=seed, samples=samples)
    click.echo(f"Seed complete: {len(paths)} files in {settings.corpus_dir}")
    click.echo("Check them with: python run.py check --method all --input <file>")


if __name__ == "__main__":
    main()
