import random

import pytest

from qschub.polyring import Polynomial


def random_poly(rng, n, max_degree, terms=6, qs=True, coeff=5):
    out = {}
    for _ in range(terms):
        xexp = [0] * n
        for _ in range(rng.randint(0, max_degree)):
            xexp[rng.randrange(n)] += 1
        qexp = [0] * (n - 1)
        if qs and n > 1 and rng.random() < 0.5:
            qexp[rng.randrange(n - 1)] += 1
        out[tuple(xexp) + tuple(qexp)] = rng.randint(-coeff, coeff)
    return Polynomial(n, out)


@pytest.fixture
def rng():
    return random.Random(20261014)


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
