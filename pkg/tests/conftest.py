import pytest

from twistcomm import builtin_group, catalog


@pytest.fixture(scope="session")
def cat():
    return catalog()


@pytest.fixture(scope="session")
def z2():
    return builtin_group("cyclic", 2)


@pytest.fixture(scope="session")
def z3():
    return builtin_group("cyclic", 3)


@pytest.fixture(scope="session")
def z4():
    return builtin_group("cyclic", 4)


@pytest.fixture(scope="session")
def z6():
    return builtin_group("cyclic", 6)


@pytest.fixture(scope="session")
def klein4():
    return builtin_group("klein4")


@pytest.fixture(scope="session")
def s3():
    return builtin_group("symmetric", 3)


@pytest.fixture(scope="session")
def s4():
    return builtin_group("symmetric", 4)


@pytest.fixture(scope="session")
def q8():
    return builtin_group("quaternion8")


@pytest.fixture(scope="session")
def d4():
    return builtin_group("dihedral", 4)
