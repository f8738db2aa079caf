from collections import Counter
from itertools import product
from math import comb

import pytest

from symcycle import DomainError, ResourceLimitError, decompose, tope_from_negative_set
from symcycle.smirnov import smirnov_count_dp
from symcycle.statistics import (
    BoundaryCase,
    PairQuery,
    boundary_case_of,
    brute_force_pairs,
    brute_force_topes,
    count_pairs_case,
    count_pairs_case_structural,
    count_pairs_total,
    count_topes_with_negpart_and_qsize,
    count_topes_with_qsize,
    pair_queries,
)

I, V, IX = BoundaryCase.I, BoundaryCase.V, BoundaryCase.IX


def naive_q(members, t):
    return sum(1 for v in decompose(tope_from_negative_set(t, members)) if v)


def naive_pairs(t):
    """Assign each coordinate to A, B or neither; classify by hand."""
    tally = Counter()
    for labels in product("abn", repeat=t):
        a = {e + 1 for e, c in enumerate(labels) if c == "a"}
        b = {e + 1 for e, c in enumerate(labels) if c == "b"}
        if not a or not b or "n" not in labels:
            continue
        ends = (labels[0], labels[-1])
        case = {
            ("n", "n"): "i", ("a", "a"): "ii", ("n", "b"): "iii", ("a", "n"): "iv",
            ("a", "b"): "v", ("b", "b"): "vi", ("n", "a"): "vii", ("b", "n"): "viii",
            ("b", "a"): "ix",
        }[ends]
        key = (len(a), len(b), naive_q(a, t), naive_q(b, t), naive_q(a | b, t), BoundaryCase(case))
        tally[key] += 1
    return tally


# --- tope counts --------------------------------------------------------------

def test_tope_count_examples():
    assert count_topes_with_qsize(4, 3) == 8
    assert count_topes_with_qsize(3, 1) == 6
    assert count_topes_with_negpart_and_qsize(4, 2, 3) == 4
    assert count_topes_with_negpart_and_qsize(5, 1, 5) == 0


@pytest.mark.parametrize("t", range(3, 15))
def test_tope_marginals_sum_to_all_topes(t):
    assert sum(count_topes_with_qsize(t, ell) for ell in range(1, t + 1, 2)) == 2**t


@pytest.mark.parametrize("t", range(3, 11))
def test_negpart_formula_symmetry(t):
    for j in range(1, t):
        for ell in range(1, t + 1, 2):
            assert count_topes_with_negpart_and_qsize(t, j, ell) == count_topes_with_negpart_and_qsize(t, t - j, ell)


@pytest.mark.parametrize("t, ell", [(4, 2), (4, 5), (4, 0)])
def test_tope_count_domain(t, ell):
    with pytest.raises(DomainError):
        count_topes_with_qsize(t, ell)


def test_brute_force_topes_examples():
    assert brute_force_topes(3) == {(0, 1): 1, (1, 1): 2, (1, 3): 1, (2, 1): 2, (2, 3): 1, (3, 1): 1}
    with pytest.raises(ResourceLimitError):
        brute_force_topes(21)


@pytest.mark.parametrize("t", range(3, 10))
def test_brute_force_topes_matches_naive(t):
    naive = Counter((m.bit_count(), naive_q({e + 1 for e in range(t) if m >> e & 1}, t)) for m in range(1 << t))
    assert brute_force_topes(t) == dict(naive)


# --- pair classification ------------------------------------------------------

def test_boundary_case_examples():
    assert boundary_case_of({3}, {5}, 7) is I
    assert boundary_case_of({1}, {4}, 4) is V
    assert boundary_case_of({4}, {1}, 4) is IX
    with pytest.raises(DomainError):
        boundary_case_of({1, 2}, {2}, 4)


def test_case_parse():
    assert BoundaryCase.parse("vii") is BoundaryCase.VII
    assert BoundaryCase.parse("IV") is BoundaryCase.IV
    with pytest.raises(DomainError):
        BoundaryCase.parse("x")


def test_query_validation():
    with pytest.raises(DomainError):
        PairQuery(5, 2, 3, 1, 1, 1)  # A u B is everything
    with pytest.raises(DomainError):
        PairQuery(5, 1, 1, 2, 1, 1)  # even ell'


@pytest.mark.parametrize("t", range(3, 7))
def test_brute_force_pairs_matches_naive(t):
    assert brute_force_pairs(t) == dict(naive_pairs(t))


def test_pair_count_examples():
    assert count_pairs_case(PairQuery(5, 1, 1, 3, 3, 5), I) == 2
    assert count_pairs_case(PairQuery(5, 1, 1, 3, 3, 3), I) == 4
    assert count_pairs_case(PairQuery(4, 1, 1, 1, 1, 3), V) == 1
    assert count_pairs_case(PairQuery(4, 1, 1, 1, 1, 3), IX) == 1
    assert count_pairs_total(PairQuery(4, 1, 1, 1, 1, 3)) == 2


@pytest.mark.parametrize("t", range(3, 7))
def test_closed_forms_match_brute_force_small(t):
    brute = brute_force_pairs(t)
    for q in pair_queries(t):
        for case in BoundaryCase:
            want = brute.get((*q.key, case), 0)
            assert count_pairs_case(q, case) == want
            assert count_pairs_case_structural(q, case) == want


@pytest.mark.parametrize("t", range(3, 13))
def test_closed_forms_equal_structural_product(t):
    for q in pair_queries(t):
        for case in BoundaryCase:
            assert count_pairs_case(q, case) == count_pairs_case_structural(q, case)


@pytest.mark.parametrize("t", range(3, 11))
def test_structural_with_recursion_matches_brute_force(t):
    brute = brute_force_pairs(t)
    total = 0
    for q in pair_queries(t):
        for case in BoundaryCase:
            n = count_pairs_case_structural(q, case, counter=smirnov_count_dp)
            assert n == brute.get((*q.key, case), 0)
            total += n
    assert total == sum(brute.values())


def test_first_undercount_of_closed_forms():
    q = PairQuery(7, 2, 2, 5, 5, 5)
    assert count_pairs_case(q, I) == 4
    assert brute_force_pairs(7)[(*q.key, I)] == 8


@pytest.mark.parametrize("t", range(3, 11))
def test_brute_force_marginal_law(t):
    brute = brute_force_pairs(t)
    by_sizes = Counter()
    for key, n in brute.items():
        by_sizes[key[:2]] += n
    for jp in range(1, t):
        for jpp in range(1, t - jp):
            assert by_sizes[(jp, jpp)] == comb(t, jp) * comb(t - jp, jpp)


def test_brute_force_workers_deterministic():
    one = brute_force_pairs(8)
    two = brute_force_pairs(8, workers=2)
    assert one == two
    assert list(one) == list(two)


def test_brute_force_pairs_limits():
    with pytest.raises(ResourceLimitError):
        brute_force_pairs(15)
    with pytest.raises(DomainError):
        brute_force_pairs(5, workers=0)
