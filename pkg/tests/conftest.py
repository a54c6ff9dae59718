import pytest

from mibialg.cyclic import GroupAlgebra
from mibialg.poset import PosetAlgebra, chain, diamond
from mibialg.quiver import PathAlgebra, Quiver


def chain_quiver():
    return Quiver.build(["u", "v", "w"], [("alpha", "u", "v"), ("beta", "v", "w")])


def loop_quiver():
    return Quiver.build(["u"], [("ell", "u", "u")])


@pytest.fixture
def qchain():
    return PathAlgebra(chain_quiver(), 3)


@pytest.fixture
def qloop():
    return PathAlgebra(loop_quiver(), 4)


@pytest.fixture
def chain3():
    return PosetAlgebra(chain(3))


@pytest.fixture
def chain4():
    return PosetAlgebra(chain(4))


@pytest.fixture
def dia():
    return PosetAlgebra(diamond())


@pytest.fixture
def kf():
    return GroupAlgebra(3)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
