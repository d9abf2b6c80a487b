from __future__ import annotations

from pathlib import Path

import pytest

from sw_forge.scanner import KNOWN_CONNECTED_CLASS_COUNTS, write_corpus

CACHE_DIR = Path(__file__).parent / ".corpus_cache"


@pytest.fixture(scope="session")
def corpus9_path() -> Path:
    """graph6 corpus of all connected 9-vertex classes; generated once and
    cached on disk (a few minutes on first use)."""
    path = CACHE_DIR / "connected_n9.g6"
    if not path.exists():
        CACHE_DIR.mkdir(exist_ok=True)
        tmp = path.with_name(path.name + ".tmp")
        with open(tmp, "w") as fh:
            count = write_corpus(fh, 9)
        assert count == KNOWN_CONNECTED_CLASS_COUNTS[9]
        tmp.rename(path)
    return path
