import pytest

from ecsd import Ecsd, parse_system

from corpus import CORPUS


@pytest.fixture(scope="session")
def corpus_graphs() -> list[Ecsd]:
    return [Ecsd(parse_system(text)) for text in CORPUS]


@pytest.fixture(params=CORPUS, ids=lambda s: s)
def corpus_graph(request) -> Ecsd:
    return Ecsd(parse_system(request.param))
