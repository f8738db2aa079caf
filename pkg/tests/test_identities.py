import pytest

from symcycle import (
    DomainError,
    InvalidDecompositionError,
    Tope,
    decompose,
    negative_part,
    q_size,
    sigma,
    tope_from_negative_set,
    x_closed_form,
    x_of_disjoint_union,
    norm_of_disjoint_union,
    x_superset_delta,
)
from symcycle.identities import SUPERSET_DISPATCH, BoundaryType, SupersetCase, superset_case


def x_of(a, t):
    return decompose(tope_from_negative_set(t, a))


def test_union_examples():
    assert x_of_disjoint_union(sigma(1, 5), sigma(1, 5)) == sigma(1, 5)
    assert x_of_disjoint_union((1, -1, 1, 0, 0), (1, 0, 0, -1, 1)) == (1, -1, 1, -1, 1)
    assert x_of_disjoint_union(x_of({1}, 4), x_of({4}, 4)) == x_of({1, 4}, 4)


def test_union_detects_overlap():
    with pytest.raises(InvalidDecompositionError):
        x_of_disjoint_union(x_of({2}, 5), x_of({2}, 5))


def test_norm_examples():
    assert norm_of_disjoint_union(sigma(1, 5), sigma(1, 5)) == 1
    assert norm_of_disjoint_union(x_of({2}, 5), x_of({4}, 5)) == 5
    assert norm_of_disjoint_union(x_of({1}, 4), x_of({4}, 4)) == 3


@pytest.mark.parametrize("t", range(3, 11))
def test_union_identities_exhaustive(t):
    xs = [decompose(Tope(t, m)) for m in range(1 << t)]
    full = (1 << t) - 1
    for a in range(1 << t):
        rest = full ^ a
        b = rest
        while True:
            assert x_of_disjoint_union(xs[a], xs[b]) == xs[a | b]
            assert norm_of_disjoint_union(xs[a], xs[b]) == q_size(Tope(t, a | b))
            if not b:
                break
            b = (b - 1) & rest


def test_closed_form_examples():
    assert x_closed_form([], 6) == sigma(1, 6)
    assert x_closed_form({2}, 5) == (1, -1, 1, 0, 0)
    assert x_closed_form({1, 2, 4}, 5) == (0, 0, 1, -1, 1)


@pytest.mark.parametrize("t", range(3, 13))
def test_closed_form_exhaustive(t):
    for mask in range(1 << t):
        tope = Tope(t, mask)
        assert x_closed_form(negative_part(tope), t) == decompose(tope)


def test_superset_examples():
    xa = x_of({2}, 5)
    assert x_superset_delta(xa, {2}, {2}, 5) == xa
    assert x_superset_delta(xa, {2}, {2, 3}, 5) == (1, -1, 0, 1, 0) == x_of({2, 3}, 5)
    got = x_superset_delta(x_of({3}, 5), {3}, {1, 3, 5}, 5)
    assert superset_case({3}, {1, 3, 5}, 5) is SupersetCase.ADDS_BOTH
    assert got == (-1, 1, -1, 1, -1) == x_of({1, 3, 5}, 5)


def test_superset_requires_containment():
    with pytest.raises(DomainError):
        x_superset_delta(x_of({2}, 5), {2}, {3}, 5)


@pytest.mark.parametrize("t", range(3, 10))
def test_superset_exhaustive(t):
    xs = [decompose(Tope(t, m)) for m in range(1 << t)]
    for c in range(1 << t):
        a = c
        while True:
            got = x_superset_delta(xs[a], negative_part(Tope(t, a)), negative_part(Tope(t, c)), t)
            assert got == xs[c]
            if not a:
                break
            a = (a - 1) & c


def test_dispatch_is_total_on_nested_boundaries():
    # every (A cap {1,t}, C cap {1,t}) with A <= C, enumerated from the sets themselves
    t = 4
    seen = set()
    for c in range(1 << t):
        a = c
        while True:
            seen.add((BoundaryType._from_mask(a, t), BoundaryType._from_mask(c, t)))
            if not a:
                break
            a = (a - 1) & c
    assert seen == set(SUPERSET_DISPATCH)
    assert len(seen) == 9
