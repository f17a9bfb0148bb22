import random
from fractions import Fraction as F
from itertools import combinations
from math import comb, factorial

import pytest

from subbirkhoff.decompose import ConvexCombination, Subpermutation, decompose_substochastic, verify_combination
from subbirkhoff.experiments import random_substochastic
from subbirkhoff.matrices import Matrix, validate_substochastic
from subbirkhoff.oracle import (
    BudgetExceeded,
    OracleBudget,
    enumerate_subpermutations,
    exact_feasibility,
    fully_indecomposable_bruteforce,
    minimal_decomposition,
    minimal_term_count,
    total_support_bruteforce,
)
from subbirkhoff.structure import SupportPattern, support_pattern

from tests.conftest import EQ1_TERMS, sp


@pytest.mark.parametrize("n", [0, 1, 2, 3, 4])
def test_enumeration_count(n):
    expected = sum(comb(n, k) ** 2 * factorial(k) for k in range(n + 1))
    terms = enumerate_subpermutations(n)
    assert len(terms) == len(set(terms)) == expected
    assert [len(t.assignment) for t in terms] == sorted(len(t.assignment) for t in terms)


def test_enumeration_small_cases():
    assert len(enumerate_subpermutations(1)) == 2
    assert len(enumerate_subpermutations(2)) == 7
    assert len(enumerate_subpermutations(3)) == 34
    assert enumerate_subpermutations(2)[:3] == [Subpermutation.zero(2), sp(2, (1, 1)), sp(2, (1, 2))]
    with pytest.raises(BudgetExceeded):
        enumerate_subpermutations(5)


def test_feasibility_examples(A):
    weights = exact_feasibility(A.inner, [t for _, t in EQ1_TERMS])
    assert weights == (F(1, 6), F(1, 4), F(1, 4), F(1, 3))
    assert exact_feasibility(A.inner, [Subpermutation.identity(2), sp(2, (1, 2), (2, 1))]) is None
    assert exact_feasibility(Matrix.identity(2), [Subpermutation.identity(2)]) == (1,)


def test_feasibility_seven_term_system(A):
    # two free variables; the choice of smallest feasible values lands on the 4-term expansion
    terms = enumerate_subpermutations(2)
    w = exact_feasibility(A.inner, terms)
    combo = ConvexCombination(2, tuple((x, t) for x, t in zip(w, terms) if x > 0))
    assert verify_combination(A.inner, combo)
    assert set(combo.terms) == set(EQ1_TERMS)
    assert w[terms.index(sp(2, (1, 2)))] == 0
    assert w[terms.index(sp(2, (1, 2), (2, 1)))] == 0


def test_feasibility_solutions_verify():
    rng = random.Random(2)
    for seed in range(40):
        b = random_substochastic(2 + seed % 2, "1/2", seed)
        terms = enumerate_subpermutations(b.n)
        for subset in combinations(rng.sample(terms, 6), 4):
            w = exact_feasibility(b.inner, subset)
            if w is None:
                continue
            assert all(x >= 0 for x in w) and sum(w) == 1
            combo = ConvexCombination(b.n, tuple((x, t) for x, t in zip(w, subset) if x > 0))
            assert verify_combination(b.inner, combo)


def test_feasibility_budget(A):
    with pytest.raises(BudgetExceeded):
        exact_feasibility(A.inner, enumerate_subpermutations(2), OracleBudget(max_terms=3))


def test_minimal_term_count_examples(A):
    assert minimal_term_count(A) == 4
    assert minimal_term_count(validate_substochastic(Matrix.identity(2))) == 1
    assert minimal_term_count(validate_substochastic(Matrix.zeros(2))) == 1
    best = minimal_decomposition(A)
    assert verify_combination(A.inner, best)


def test_minimal_term_count_budget(A):
    with pytest.raises(BudgetExceeded):
        minimal_term_count(A, OracleBudget(max_terms=3))
    with pytest.raises(BudgetExceeded):
        minimal_term_count(A, OracleBudget(max_subsets=2))
    with pytest.raises(ValueError):
        OracleBudget(max_side=0)


def test_minimal_between_pipeline_and_bound():
    checked = 0
    for seed in range(60):
        b = random_substochastic(2 + seed % 2, ["1/2", "3/4"][seed % 2], seed)
        rep = decompose_substochastic(b)
        if rep.term_count > 5:
            continue  # dense 3x3 searches are too large for a unit test
        assert minimal_term_count(b) <= rep.term_count <= rep.bound
        checked += 1
    assert checked >= 30


def test_total_support_bruteforce_examples():
    assert total_support_bruteforce(SupportPattern.identity(3))
    assert not total_support_bruteforce(SupportPattern.from_cells(2, [(0, 0), (0, 1), (1, 1)]))
    with pytest.raises(BudgetExceeded):
        total_support_bruteforce(SupportPattern.identity(7))


def test_fully_indecomposable_bruteforce_examples(A_comp):
    assert fully_indecomposable_bruteforce(SupportPattern.full(2))
    assert not fully_indecomposable_bruteforce(SupportPattern.identity(2))
    assert fully_indecomposable_bruteforce(support_pattern(A_comp))
    assert fully_indecomposable_bruteforce(SupportPattern.full(1))
    assert not fully_indecomposable_bruteforce(SupportPattern(1, frozenset()))
