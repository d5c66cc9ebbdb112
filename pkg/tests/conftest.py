import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from coprimelab.corpus import build_corpus_instance, build_glauberman_example
from coprimelab.groups import generate_group


@pytest.fixture(scope="session")
def s3():
    return generate_group(3, [(1, 2, 0), (1, 0, 2)])


@pytest.fixture(scope="session")
def s4():
    return build_corpus_instance({"name": "symmetric", "params": {"m": 4}})[0]


@pytest.fixture(scope="session")
def s5():
    return build_corpus_instance({"name": "symmetric", "params": {"m": 5}})[0]


@pytest.fixture(scope="session")
def d4():
    return build_corpus_instance({"name": "dihedral", "params": {"m": 4}})[0]


@pytest.fixture(scope="session")
def heis3():
    return build_corpus_instance({"name": "heisenberg", "params": {"p": 3}})[0]


@pytest.fixture(scope="session")
def c9():
    return build_corpus_instance({"name": "cyclic", "params": {"m": 9}})[0]


@pytest.fixture(scope="session")
def glauberman():
    return build_glauberman_example()


@pytest.fixture(scope="session")
def c3c3_swap():
    return build_corpus_instance(
        {"name": "direct_product",
         "params": {"factors": [{"name": "cyclic", "params": {"m": 3}},
                                {"name": "cyclic", "params": {"m": 3}}]},
         "automorphism": {"recipe": "swap"}})
