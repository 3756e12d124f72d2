from __future__ import annotations

import pytest

from supermin import catalog, harmonic

# The five exponent pairs every geometric suite runs over.
FAMILY_PAIRS = ((1, 1), (1, 2), (2, 1), (2, 3), (3, 2))


@pytest.fixture(scope="session")
def curve11():
    return catalog.example_family(1, 1)


@pytest.fixture(scope="session")
def curve12():
    return catalog.example_family(1, 2)


@pytest.fixture(scope="session")
def family_curves():
    return {pair: catalog.example_family(*pair) for pair in FAMILY_PAIRS}


@pytest.fixture(scope="session")
def seq11(curve11):
    return harmonic.build_sequence(curve11)


@pytest.fixture(scope="session")
def seq12(curve12):
    return harmonic.build_sequence(curve12)
