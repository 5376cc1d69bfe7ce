import numpy as np
import pytest

from albertdiag.algebra import COMPACT, Octonion


@pytest.fixture
def rng():
    return np.random.default_rng(20261016)


def e(i, mu=COMPACT):
    return Octonion.basis(i, mu)


def random_unit_imaginary(rng):
    c = np.zeros(8)
    c[1:] = rng.normal(size=7)
    return Octonion(c / np.linalg.norm(c))


def random_unit(rng, mu=COMPACT):
    while True:
        c = rng.normal(size=8)
        n = Octonion(c, mu).norm2()
        if n > 0.1:
            return Octonion(c / np.sqrt(n), mu)


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is not None and mod.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in mod.RESULTS:
            terminalreporter.write_line(line)
