import pytest

from lieprops.fields import GF
from lieprops.randalg import corpus


@pytest.fixture(scope="session")
def random_corpus():
    """The seeded 200-algebra corpus over GF(2) and GF(3), dim <= 4."""
    return corpus(200, seed=0, n_max=4, fields=(GF(2), GF(3)))


ACCEPTANCE = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        ok, text = ACCEPTANCE[n]
        terminalreporter.write_line(f"criterion {n:>2}: {'PASS' if ok else 'FAIL'}  {text}")
