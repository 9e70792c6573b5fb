import pytest

from linearcat.models import FinCMon, FinPtSet, all_commutative_monoids


@pytest.fixture(scope="session")
def pt3():
    return FinPtSet((1, 2, 3))


@pytest.fixture(scope="session")
def pt2():
    return FinPtSet((1, 2))


@pytest.fixture(scope="session")
def cmon():
    return FinCMon()


@pytest.fixture(scope="session")
def cmon2():
    return FinCMon(all_commutative_monoids(2))
