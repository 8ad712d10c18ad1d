"""
reset_data.py
-------------
Removes every defining-set file from the corpus directory
(MINCODES_CORPUS_DIR, default ./corpus).

Usage:
    $ python reset_data.py

Regenerate the corpus afterwards with:
    $ python seeds.py
"""

from mincodes.config import Settings
from mincodes.services.corpus_service import CorpusService
from mincodes.utils.log import configure_logging


def main():
    settings = Settings.from_env()
    configure_logging(settings.log_level)
    removed = CorpusService.clear_corpus(settings.corpus_dir)
    print(f"Removed {removed} corpus file(s) from {settings.corpus_dir}")
    print("Tip: run `python seeds.py` to regenerate it.")


if __name__ == "__main__":
    main()
