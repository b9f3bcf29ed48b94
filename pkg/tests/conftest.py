import sys
from pathlib import Path

from hypothesis import settings
from hypothesis import strategies as st

from schubfpt.tuples import GammaTuple

sys.path.insert(0, str(Path(__file__).parent))

settings.register_profile("default", deadline=None)
settings.load_profile("default")

EX31 = GammaTuple((2, 3, 4, 6, 8, 9), 11)


@st.composite
def gammas(draw, max_n=9, min_n=1):
    n = draw(st.integers(min_n, max_n))
    d = draw(st.integers(1, n))
    entries = draw(st.lists(st.integers(1, n), min_size=d, max_size=d, unique=True))
    return GammaTuple(tuple(sorted(entries)), n)


ACCEPTANCE_LOG: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LOG:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LOG:
            terminalreporter.write_line(line)
