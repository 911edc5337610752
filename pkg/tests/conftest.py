import pathlib

import pytest

DATA_DIR = pathlib.Path(__file__).parent / "data"
CORPUS_DIR = DATA_DIR / "corpus"
INSTANCE_DIR = DATA_DIR / "instances"


@pytest.fixture(scope="session")
def corpus_dir():
    return CORPUS_DIR


@pytest.fixture(scope="session")
def corpus_files():
    return sorted(CORPUS_DIR.glob("*.py"))


@pytest.fixture(scope="session")
def corpus_sources(corpus_files):
    return [p.read_text("utf-8") for p in corpus_files]


@pytest.fixture(scope="session")
def instance_dir():
    return INSTANCE_DIR


@pytest.fixture(scope="session")
def instance_paths():
    return sorted(INSTANCE_DIR.glob("*.json"))
