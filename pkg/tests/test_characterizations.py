import random
from itertools import combinations, product

import pytest
from hypothesis import given, settings, strategies as st

from rado_strings.characterizations import (
    NoFastpath,
    ThreeVarKind,
    case_two_shape,
    classify_three_var,
    fastpath,
    reduce_to_adjacent_pair,
    schur_only_test,
    sigma_one_criterion,
    three_var_sum_zero_injective,
)
from rado_strings.crossval import random_reduced, random_zero_sum_triple
from rado_strings.solver import solve_in_class
from rado_strings.strings import is_reduced

from conftest import reduced_strings


def _sigma_one_by_subsets(coeffs):
    m = len(coeffs)
    for j in range(m):
        others = [l for l in range(m) if l != j]
        if not any(
            coeffs[j] + sum(coeffs[l] for l in H) == 0
            for r in range(1, m)
            for H in combinations(others, r)
        ):
            return False
    return True


@pytest.mark.parametrize(
    "coeffs, expected",
    [((4, 2, 3, -5, -1, -2), True), ((2, -2, -1, -1), True), ((1, 1, -3), False)],
)
def test_sigma_one_criterion(coeffs, expected):
    assert sigma_one_criterion(coeffs) is expected
    assert _sigma_one_by_subsets(coeffs) is expected


@settings(max_examples=200, deadline=None)
@given(st.lists(st.integers(-4, 4).filter(bool), min_size=2, max_size=5).map(tuple))
def test_sigma_one_matches_solver(coeffs):
    assert sigma_one_criterion(coeffs) == solve_in_class(coeffs, (1,)).sat
    assert sigma_one_criterion(coeffs) == _sigma_one_by_subsets(coeffs)


@pytest.mark.parametrize(
    "coeffs, sigma, expected",
    [
        ((3, -5, 2), (5, 7, -10, -6, 13), True),
        ((3, -5, 2), (1,), False),
        ((1, 1, -2), (1, -1), True),
        ((1, 1, -2), (3, 5), False),
        ((1, -2, 1), (2, -1), False),
    ],
)
def test_three_var_examples(coeffs, sigma, expected):
    assert three_var_sum_zero_injective(coeffs, sigma) is expected
    assert solve_in_class(coeffs, sigma, injective=True).sat is expected


def test_equal_indices_reading_disagrees_with_solver():
    # (1,-1) is parallel to (c_i, -c_i) for every i, but 3x1-5x2+2x3 has no
    # injective solution over {0, 1, -1}
    assert three_var_sum_zero_injective((3, -5, 2), (1, -1), allow_equal_indices=True)
    assert not three_var_sum_zero_injective((3, -5, 2), (1, -1))
    assert not solve_in_class((3, -5, 2), (1, -1), injective=True).sat


@pytest.mark.parametrize(
    "coeffs, sigma, h",
    [
        ((3, -5, 2), (5, 7, -10, -6, 13), 3),
        ((1, 1, -2), (3, 5), None),
        ((1, -2, 1), (2, -1), None),
        ((1, 1, -2), (4, 1, -1), 2),
    ],
)
def test_reduce_to_adjacent_pair(coeffs, sigma, h):
    assert reduce_to_adjacent_pair(coeffs, sigma) == h
    if h is not None:
        assert solve_in_class(coeffs, sigma[h - 1:h + 1], injective=True).sat
    for g in range(1, (h or len(sigma)) if h else len(sigma)):
        assert not solve_in_class(coeffs, sigma[g - 1:g + 1], injective=True).sat


def test_case_one_preconditions():
    with pytest.raises(ValueError):
        three_var_sum_zero_injective((1, 1, -1), (1,))
    with pytest.raises(ValueError):
        three_var_sum_zero_injective((1, 1, -2, 0 + 1), (1,))
    with pytest.raises(ValueError):
        reduce_to_adjacent_pair((1, 1, -2), (1, 1))


def _case_one_pool(trials, seed):
    rng = random.Random(seed)
    return [(random_zero_sum_triple(rng, 5), random_reduced(rng, 3, 5)) for _ in range(trials)]


@pytest.mark.parametrize("eq, sigma", _case_one_pool(80, 11))
def test_case_one_agreement(eq, sigma):
    slow = solve_in_class(eq, sigma, injective=True).sat
    assert three_var_sum_zero_injective(eq, sigma) == slow
    assert (reduce_to_adjacent_pair(eq, sigma) is not None) == slow
    pairwise = any(solve_in_class(eq, p, injective=True).sat for p in zip(sigma, sigma[1:]))
    assert pairwise == slow
    # injective and non-constant coincide for three variables summing to zero
    assert solve_in_class(eq, sigma, nonconstant=True).sat == slow


@pytest.mark.parametrize(
    "coeffs, kind, detail",
    [
        ((3, -5, 2), ThreeVarKind.TRIPLE_SUM_ZERO, (1, 2, 3)),
        ((1, -1, 2), ThreeVarKind.PAIR_SUM_ZERO, (1, 2)),
        ((2, 1, -2), ThreeVarKind.PAIR_SUM_ZERO, (1, 3)),
        ((1, 1, 1), ThreeVarKind.NOT_RADO, ()),
    ],
)
def test_classify_three_var(coeffs, kind, detail):
    cls = classify_three_var(coeffs)
    assert cls.kind is kind and cls.detail == detail


def test_case_two_shape():
    assert case_two_shape((2, 1, -2)) == (2, 1, (1, 3, 2))
    with pytest.raises(ValueError):
        case_two_shape((3, -5, 2))


@pytest.mark.parametrize("c, d, expected", [(1, 1, True), (1, 2, False), (1, 3, False), (-1, 1, True)])
def test_schur_only(c, d, expected):
    assert schur_only_test(c, d) is expected


def test_schur_only_requires_coprime():
    with pytest.raises(ValueError):
        schur_only_test(2, 4)


@settings(max_examples=50, deadline=None)
@given(reduced_strings(max_len=3, bound=3))
def test_schur_universal(sigma):
    assert solve_in_class((1, 1, -1), sigma).sat
    assert solve_in_class((1, 1, -1), sigma, injective=True).sat


ALL_REDUCED_4 = [
    s
    for n in range(1, 4)
    for s in product([v for v in range(-4, 5) if v], repeat=n)
    if is_reduced(s)
]


@pytest.mark.parametrize("c, d", [(1, 2), (1, 3), (2, 1), (3, 2), (1, -2)])
def test_non_schur_never_solvable(c, d):
    eq = (c, -c, d)
    assert not schur_only_test(c, d)
    for sigma in ALL_REDUCED_4:
        assert not solve_in_class(eq, sigma).sat


def test_fastpath_methods():
    assert fastpath((4, 2, 3, -5, -1, -2), (1,)).method == "fastpath-sigma1"
    v = fastpath((3, -5, 2), (5, 7, -10, -6, 13), injective=True)
    assert v.sat and v.method == "fastpath-3var"
    assert fastpath((1, -1, 2), (1, 2)).to_json() == {"status": "unsat", "method": "fastpath-schur"}
    assert fastpath((1, 1, 1), (1, 2)).to_json() == {"status": "unsat", "method": "fastpath-3var"}
    with pytest.raises(NoFastpath):
        fastpath((1, 1, -1, -1), (1, 2))


@settings(max_examples=200, deadline=None)
@given(
    st.lists(st.integers(-4, 4).filter(bool), min_size=2, max_size=4).map(tuple),
    reduced_strings(max_len=3, bound=4),
    st.booleans(),
)
def test_fastpath_agrees_with_solver(coeffs, sigma, injective):
    try:
        fast = fastpath(coeffs, sigma, injective)
    except NoFastpath:
        return
    assert fast.sat == solve_in_class(coeffs, sigma, injective).sat
