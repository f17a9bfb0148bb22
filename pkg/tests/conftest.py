from fractions import Fraction as F

import pytest
from hypothesis import settings

from subbirkhoff.decompose import ConvexCombination, Subpermutation
from subbirkhoff.matrices import Matrix, validate_substochastic

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

# worked 4x4 example; entry (3,1) is 0.2
D_TEXT = [["0.1", "0", "0.2", "0.1"],
          ["0", "0.2", "0.1", "0"],
          ["0.2", "0", "0", "0.1"],
          ["0.1", "0.2", "0.3", "0.2"]]

D_COMP_TEXT = [["0.1", "0", "0.2", "0.1", "0.6", "0", "0"],
               ["0", "0.2", "0.1", "0", "0.4", "0.3", "0"],
               ["0.2", "0", "0", "0.1", "0", "0.7", "0"],
               ["0.1", "0.2", "0.3", "0.2", "0", "0", "0.2"],
               ["0.6", "0.4", "0", "0", "0", "0", "0"],
               ["0", "0.2", "0.4", "0.4", "0", "0", "0"],
               ["0", "0", "0", "0.2", "0", "0", "0.8"]]

A_ROWS = [[F(7, 12), 0], [F(1, 6), F(1, 2)]]
A_COMP_ROWS = [[F(7, 12), 0, F(5, 12)], [F(1, 6), F(1, 2), F(1, 3)], [F(1, 4), F(1, 2), F(1, 4)]]


def sp(n, *pairs):
    """Subpermutation from 1-indexed (row, col) pairs."""
    return Subpermutation(n, tuple((r - 1, c - 1) for r, c in pairs))


# A^comp = 1/6 P1 + 1/4 P2 + 1/4 P3 + 1/3 P4
A_COMP_TERMS = [
    (F(1, 6), sp(3, (1, 3), (2, 1), (3, 2))),
    (F(1, 4), sp(3, (1, 1), (2, 2), (3, 3))),
    (F(1, 4), sp(3, (1, 3), (2, 2), (3, 1))),
    (F(1, 3), sp(3, (1, 1), (2, 3), (3, 2))),
]
# the induced 2x2 expansion of A
EQ1_TERMS = [
    (F(1, 6), sp(2, (2, 1))),
    (F(1, 4), sp(2, (1, 1), (2, 2))),
    (F(1, 4), sp(2, (2, 2))),
    (F(1, 3), sp(2, (1, 1))),
]


@pytest.fixture
def D():
    return validate_substochastic(Matrix(D_TEXT))


@pytest.fixture
def D_comp():
    return Matrix(D_COMP_TEXT)


@pytest.fixture
def A():
    return validate_substochastic(Matrix(A_ROWS))


@pytest.fixture
def A_comp():
    return Matrix(A_COMP_ROWS)


@pytest.fixture
def eq1():
    return ConvexCombination(2, tuple(EQ1_TERMS))


@pytest.fixture
def a_comp_combo():
    return ConvexCombination(3, tuple(A_COMP_TERMS))


# one line per acceptance criterion, printed after the run whatever the outcome
ACCEPTANCE_LINES: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for key in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(ACCEPTANCE_LINES[key])
