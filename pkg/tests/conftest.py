"""
Shared fixtures for the fmre test suite
"""

import sys
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

# Add src to path
sys.path.insert(0, str(Path(__file__).parent.parent / "src"))

from dsl.parser import parse  # noqa: E402

CORPUS = Path(__file__).parent.parent / "corpus" / "list.fm"

settings.register_profile(
    "fmre", deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("fmre")


@pytest.fixture
def corpus_path() -> Path:
    """Path of the List product line model"""
    return CORPUS


@pytest.fixture
def corpus_text() -> str:
    return CORPUS.read_text(encoding="utf-8")


@pytest.fixture
def corpus(corpus_text):
    """Parsed List product line model"""
    return parse(corpus_text)
