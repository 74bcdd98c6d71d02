import random

import pytest
from hypothesis import strategies as st

from posetcong.io import load_bundled
from posetcong.poset import build_poset

ACCEPTANCE_LINES: dict[int, str] = {}


@pytest.fixture(scope="session")
def fig1():
    return load_bundled("fig1")


@pytest.fixture(scope="session")
def fig3():
    return load_bundled("fig3")


@pytest.fixture(scope="session")
def fig4():
    return load_bundled("fig4")


@pytest.fixture(scope="session")
def fig6():
    return load_bundled("fig6")


@st.composite
def posets(draw, max_size=7):
    """Random posets: a random DAG over a shuffled order, transitively closed."""
    n = draw(st.integers(1, max_size))
    perm = draw(st.permutations(range(n)))
    labels = [f"p{i}" for i in range(n)]
    edges = draw(
        st.lists(
            st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)).filter(lambda e: e[0] < e[1]),
            max_size=2 * n,
        )
    )
    covers = [(labels[perm[i]], labels[perm[j]]) for i, j in edges]
    return build_poset(labels, covers)


@pytest.fixture
def rng():
    return random.Random(20240601)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for k in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(ACCEPTANCE_LINES[k])
