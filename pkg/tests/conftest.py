import pathlib

import pytest

from stringyhodge import corpus

FIXTURES = pathlib.Path(__file__).resolve().parent.parent / "fixtures"


@pytest.fixture(scope="session")
def fixtures_dir():
    return FIXTURES


@pytest.fixture(scope="session")
def polygons16():
    return corpus.reflexive_polygons()


@pytest.fixture(scope="session")
def polytopes3d():
    return corpus.reflexive_3polytopes()


@pytest.fixture(scope="session")
def simplex_corpus():
    return corpus.mirror_simplex_corpus(6)
