import random
from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from subbirkhoff.experiments import random_substochastic
from subbirkhoff.matrices import (
    Matrix,
    SubstochasticError,
    first_dependency,
    format_rational,
    line_sums,
    rank,
    rational_from_text,
    rational_nullspace,
    sigma,
    sub_defect,
    validate_substochastic,
)
from subbirkhoff.structure import SupportPattern, incidence_matrix

from tests.conftest import D_TEXT


@pytest.mark.parametrize("text,value", [
    ("0.1", F(1, 10)),
    ("7/12", F(7, 12)),
    ("1.25", F(5, 4)),
    ("-3", F(-3)),
    ("-2/4", F(-1, 2)),
    ("0.30", F(3, 10)),
])
def test_rational_from_text(text, value):
    assert rational_from_text(text) == value


@pytest.mark.parametrize("bad", ["", "1e3", "0x10", "1/0", "1.", ".5", "1/2/3", "abc", "nan"])
def test_rational_from_text_rejects(bad):
    with pytest.raises(ValueError):
        rational_from_text(bad)


@given(st.fractions())
def test_rational_text_roundtrip(x):
    once = rational_from_text(format_rational(x))
    assert once == x
    assert rational_from_text(format_rational(once)) == once


def test_matrix_refuses_floats():
    with pytest.raises(TypeError):
        Matrix([[0.1]])


def test_sigma():
    assert sigma(Matrix(D_TEXT)) == F(9, 5)
    assert sigma(Matrix.zeros(3)) == 0
    assert sigma(Matrix([["7/12", 0], ["1/6", "1/2"]])) == F(5, 4)


def test_line_sums():
    rows, cols = line_sums(Matrix(D_TEXT))
    assert rows == [F(2, 5), F(3, 10), F(3, 10), F(4, 5)]
    assert cols == [F(2, 5), F(2, 5), F(3, 5), F(2, 5)]
    assert line_sums(Matrix.identity(2)) == ([1, 1], [1, 1])
    assert line_sums(Matrix.zeros(2)) == ([0, 0], [0, 0])


def test_validate_examples():
    d = validate_substochastic(Matrix(D_TEXT))
    assert d.sub_defect == 3 and d.sigma == F(9, 5)
    assert validate_substochastic(Matrix.identity(2)).sub_defect == 0
    with pytest.raises(SubstochasticError, match=r"row 1 sum 3/2 > 1 \(excess 1/2\)"):
        validate_substochastic(Matrix([[1, F(1, 2)], [0, 0]]))


def test_validate_errors():
    with pytest.raises(SubstochasticError, match="not square"):
        validate_substochastic(Matrix([[0, 0]]))
    with pytest.raises(SubstochasticError, match=r"\(2,1\)"):
        validate_substochastic(Matrix([[0, 0], [F(-1, 3), 0]]))
    with pytest.raises(SubstochasticError, match="column 2"):
        validate_substochastic(Matrix([[0, "0.6"], [0, "0.6"]]))


def test_sub_defect_examples(D, A):
    assert sub_defect(D) == 3
    assert sub_defect(A) == 1
    for n in range(1, 5):
        assert sub_defect(validate_substochastic(Matrix.zeros(n))) == n
        assert sub_defect(validate_substochastic(Matrix.identity(n))) == 0


@given(st.integers(1, 7), st.sampled_from(["0", "1/4", "1/2", "1", "3/4"]), st.integers(0, 10**6))
def test_substochastic_invariants(n, density, seed):
    b = random_substochastic(n, density, seed)
    rows, cols = line_sums(b.inner)
    assert b.sigma == sum(rows) == sum(cols)
    assert 0 <= b.sub_defect <= n
    assert sub_defect(b) == b.sub_defect
    assert (b.sub_defect == 0) == (all(r == 1 for r in rows) and all(c == 1 for c in cols))


def test_nullspace_examples():
    assert rational_nullspace(Matrix.identity(3)) == []
    assert rational_nullspace(Matrix([[1, -1]])) == [(1, 1)]
    a, _ = incidence_matrix(SupportPattern.full(3))
    assert len(rational_nullspace(a)) == 4


def _rank_oracle(rows, perm):
    """Plain Fraction row reduction over a permuted column order."""
    m = [[F(row[j]) for j in perm] for row in rows]
    r = 0
    for col in range(len(perm)):
        p = next((i for i in range(r, len(m)) if m[i][col] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        for i in range(r + 1, len(m)):
            f = m[i][col] / m[r][col]
            m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        r += 1
    return r


small_fracs = st.fractions(min_value=-3, max_value=3, max_denominator=5)


@given(st.integers(1, 6), st.integers(1, 7), st.data())
def test_rank_nullity(n_rows, n_cols, data):
    rows = data.draw(st.lists(st.lists(st.one_of(st.just(F(0)), small_fracs),
                                       min_size=n_cols, max_size=n_cols),
                              min_size=n_rows, max_size=n_rows))
    m = Matrix(rows, n_cols=n_cols)
    basis = rational_nullspace(m)
    perm = data.draw(st.permutations(range(n_cols)))
    assert rank(m) + len(basis) == n_cols
    assert _rank_oracle(rows, perm) == rank(m)
    for v in basis:
        assert all(sum(a * x for a, x in zip(row, v)) == 0 for row in m.rows)
    # basis vectors are independent
    assert _rank_oracle(basis, range(n_cols)) == len(basis) if basis else True
    first = first_dependency(m)
    assert first == (basis[0] if basis else None)


def test_nullspace_deterministic():
    rng = random.Random(3)
    rows = [[rng.randint(-2, 2) for _ in range(6)] for _ in range(4)]
    assert rational_nullspace(Matrix(rows)) == rational_nullspace(Matrix(rows))
