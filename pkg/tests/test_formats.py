import json
from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from subbirkhoff.decompose import decompose_substochastic, verify_combination
from subbirkhoff.experiments import random_substochastic
from subbirkhoff.formats import (
    DocumentError,
    clamp,
    parse_decomposition_file,
    parse_matrix_file,
    write_decomposition_file,
    write_matrix_file,
)
from subbirkhoff.matrices import Matrix, line_sums, validate_substochastic

from tests.conftest import A_ROWS, D_TEXT


def test_parse_json_document():
    m = parse_matrix_file('{"n": 2, "entries": [["7/12", "0"], ["1/6", "0.5"]]}')
    assert m == Matrix(A_ROWS)


def test_parse_plain_grid():
    text = "\n".join(" ".join(row) for row in D_TEXT) + "\n"
    m = parse_matrix_file(text.encode())
    assert m[2, 0] == F(1, 5)
    assert m.shape == (4, 4)


def test_parse_single_cell_and_integers():
    assert parse_matrix_file('{"n": 1, "entries": [["1"]]}') == Matrix.identity(1)
    assert parse_matrix_file('{"n": 2, "entries": [[1, 0], [0, 1]]}') == Matrix.identity(2)


@pytest.mark.parametrize("text, fragment", [
    ('{"n": 2, "entries": [["1", "0"], ["0"]]}', "row 2"),
    ('{"n": 3, "entries": [["1"]]}', "expected 3 rows"),
    ('{"n": 1, "entries": [[0.5]]}', "exact string"),
    ('{"n": 1, "entries": [["1/0"]]}', "(1,1)"),
    ('{"n": 1, "entries": [["abc"]]}', "(1,1)"),
    ('{"n": -1, "entries": []}', "nonnegative"),
    ('{"entries": ', "malformed"),
    ('{"n": 1}', "entries"),
    ("0.1 0.2\n0.3\n", "row 2"),
])
def test_parse_errors(text, fragment):
    with pytest.raises(DocumentError) as info:
        parse_matrix_file(text)
    assert fragment in str(info.value)


def test_matrix_round_trip(D):
    data = write_matrix_file(D.inner)
    assert parse_matrix_file(data) == D.inner
    doc = json.loads(data)
    assert doc["n"] == 4 and doc["entries"][2][0] == "1/5"


def test_decomposition_document_shape(A):
    rep = decompose_substochastic(A)
    doc = json.loads(write_decomposition_file(rep))
    assert doc["n"] == 2
    weights = [F(t["weight"]) for t in doc["terms"]]
    assert weights == sorted(weights, reverse=True) and sum(weights) == 1
    for t in doc["terms"]:
        assert all(1 <= r <= 2 and 1 <= c <= 2 for r, c in t["assignment"])
    assert "completion" not in doc
    full = json.loads(write_decomposition_file(rep, keep_completion=True))
    assert full["completion"]["n"] == 3


def test_decomposition_round_trip(eq1):
    back = parse_decomposition_file(write_decomposition_file(eq1))
    assert back.canonical() == eq1.canonical()


def test_zero_matrix_gives_single_zero_term():
    rep = decompose_substochastic(validate_substochastic(Matrix.zeros(3)))
    doc = json.loads(write_decomposition_file(rep))
    assert doc["terms"] == [{"weight": "1", "assignment": []}]


@pytest.mark.parametrize("text", [
    '{"terms": []}',
    '{"n": 2, "terms": [{"weight": "1"}]}',
    '{"n": 2, "terms": [{"weight": "1", "assignment": [[1, 1], [2, 1]]}]}',
    '{"n": 2, "terms": [{"weight": "x", "assignment": []}]}',
    "not json",
])
def test_bad_decomposition_documents(text):
    with pytest.raises(DocumentError):
        parse_decomposition_file(text)


def test_clamp():
    m = Matrix([["1/2", "3/4"], ["1/4", "0"]])
    c = clamp(m)
    assert c == m.scaled(F(4, 5))
    assert max(sum(line_sums(c), [])) == 1
    assert clamp(Matrix(A_ROWS)) == Matrix(A_ROWS)


@given(st.integers(0, 10_000), st.integers(1, 5))
def test_pipeline_document_verifies(seed, n):
    b = random_substochastic(n, "1/2", seed)
    combo = parse_decomposition_file(write_decomposition_file(decompose_substochastic(b)))
    assert verify_combination(parse_matrix_file(write_matrix_file(b.inner)), combo)
