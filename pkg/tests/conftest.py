import pytest

from quivalg import cli


@pytest.fixture(scope="session")
def exA():
    return cli.load_algebra_file("exA.alg")


@pytest.fixture(scope="session")
def exB():
    return cli.load_algebra_file("exB.alg")


@pytest.fixture(scope="session")
def a2():
    return cli.load_algebra_file("a2.alg")


@pytest.fixture(scope="session")
def nak_si():
    return cli.load_algebra_file("nakayama-selfinj.alg")


@pytest.fixture(scope="session")
def nak_a3():
    return cli.load_algebra_file("nakayama-a3.alg")


@pytest.fixture(scope="session")
def exC():
    return cli.load_glue_file("exC.glue")


@pytest.fixture(scope="session")
def exCop():
    return cli.load_glue_file("exCop.glue")


@pytest.fixture(scope="session")
def remark54():
    return cli.load_glue_file("remark54.glue")


@pytest.fixture(scope="session")
def rsz():
    return cli.load_glue_file("rad-square-zero-pair.glue")
