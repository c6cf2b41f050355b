"""Closed-form answers for special cases, each checkable against the general solver.

* sigma of length one: a per-coefficient subset-sum condition.
* Three variables with c1 + c2 + c3 == 0: injective solvability depends only
  on whether some adjacent pair of sigma is proportional to some
  ``(c_i, -c_j)``.
* Three variables with a pair summing to zero: only Schur's equation (up to
  sign and permutation) is solvable, and then for every sigma.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations
from math import gcd
from typing import Optional, Sequence, Tuple

from .equations import as_equation, content_normalize
from .solver import solve_in_class
from .strings import check_reduced


class ThreeVarKind(enum.Enum):
    TRIPLE_SUM_ZERO = "triple-sum-zero"
    PAIR_SUM_ZERO = "pair-sum-zero"
    NOT_RADO = "not-rado"


@dataclass(frozen=True)
class ThreeVarClass:
    kind: ThreeVarKind
    detail: Tuple[int, ...] = ()  # 1-based indices of the zero-sum set

    def to_json(self) -> dict:
        return {"kind": self.kind.value, "indices": list(self.detail)}


def _subset_sums_to(values: Sequence[int], target: int) -> bool:
    """True if some nonempty sub-multiset of ``values`` sums to ``target``."""
    reachable = set()
    for v in values:
        reachable |= {s + v for s in reachable} | {v}
        if target in reachable:
            return True
    return False


def sigma_one_criterion(eq) -> bool:
    """Solvability with sigma = (1): every c_j cancels against a nonempty set of the others."""
    coeffs = as_equation(eq).coefficients
    for j, cj in enumerate(coeffs):
        others = coeffs[:j] + coeffs[j + 1:]
        if not _subset_sums_to(others, -cj):
            return False
    return True


def classify_three_var(eq) -> ThreeVarClass:
    c = as_equation(eq).coefficients
    if len(c) != 3:
        raise ValueError(f"expected three coefficients, got {len(c)}")
    if sum(c) == 0:
        return ThreeVarClass(ThreeVarKind.TRIPLE_SUM_ZERO, (1, 2, 3))
    for i, j in combinations(range(3), 2):
        if c[i] + c[j] == 0:
            return ThreeVarClass(ThreeVarKind.PAIR_SUM_ZERO, (i + 1, j + 1))
    return ThreeVarClass(ThreeVarKind.NOT_RADO)


def _check_case_one(eq, sigma):
    eq = as_equation(eq)
    if eq.m != 3 or sum(eq.coefficients) != 0:
        raise ValueError(f"need three coefficients summing to zero, got {list(eq.coefficients)}")
    sigma = check_reduced(sigma)
    if not sigma:
        raise ValueError("sigma must be nonempty")
    return eq.coefficients, sigma


def _parallel(u: Tuple[int, int], v: Tuple[int, int]) -> bool:
    # r*u == s*v for nonzero r, s; all entries involved are nonzero
    return u[0] * v[1] == u[1] * v[0]


def _pair_matches(c, a, b, allow_equal_indices: bool) -> bool:
    for i in range(3):
        for j in range(3):
            if i == j and not allow_equal_indices:
                continue
            if _parallel((a, b), (c[i], -c[j])):
                return True
    return False


def three_var_sum_zero_injective(eq, sigma, *, allow_equal_indices: bool = False) -> bool:
    """Injective solvability for c1 + c2 + c3 == 0.

    True iff some adjacent pair ``(a_h, a_{h+1})`` of sigma is a nonzero
    multiple of ``(c_i, -c_j)``.  The general solution is
    ``t*(1,1,1) + u*(0, c3, -c2)``, whose three pairwise differences are
    ``u*c1``, ``u*c2``, ``u*c3`` up to sign, so only ``i != j`` can occur.
    ``allow_equal_indices=True`` also admits ``i == j``; that variant is
    wrong whenever ``a_{h+1} == -a_h`` and no two coefficients coincide, and
    exists only so the discrepancy can be exercised.
    """
    c, sigma = _check_case_one(eq, sigma)
    return any(
        _pair_matches(c, a, b, allow_equal_indices) for a, b in zip(sigma, sigma[1:])
    )


def reduce_to_adjacent_pair(eq, sigma) -> Optional[int]:
    """Least 1-based h whose pair ``(a_h, a_{h+1})`` already admits an injective solution."""
    c, sigma = _check_case_one(eq, sigma)
    for h, (a, b) in enumerate(zip(sigma, sigma[1:]), start=1):
        if _pair_matches(c, a, b, False):
            return h
    return None


def case_two_shape(eq) -> Tuple[int, int, Tuple[int, int, int]]:
    """Rewrite a pair-sum-zero equation as ``c*(x1 - x2) + d*x3``.

    Returns ``(c, d, perm)`` where ``perm`` lists the original 1-based
    variable indices in the order they play x1, x2, x3.
    """
    cls = classify_three_var(eq)
    if cls.kind is not ThreeVarKind.PAIR_SUM_ZERO:
        raise ValueError("equation has no pair of coefficients summing to zero")
    coeffs = as_equation(eq).coefficients
    i, j = cls.detail
    (k,) = {1, 2, 3} - {i, j}
    return coeffs[i - 1], coeffs[k - 1], (i, j, k)


def schur_only_test(c: int, d: int) -> bool:
    """For ``c*(x1 - x2) + d*x3`` with gcd(c, d) == 1: solvable for every sigma iff |c| == |d| == 1.

    When this is False the equation is solvable for no sigma at all.
    """
    if c == 0 or d == 0:
        raise ValueError("c and d must be nonzero")
    if gcd(c, d) != 1:
        raise ValueError(f"gcd({c}, {d}) != 1; normalize the equation first")
    return abs(c) == 1 and abs(d) == 1


@dataclass(frozen=True)
class FastpathVerdict:
    sat: bool
    method: str

    def to_json(self) -> dict:
        return {"status": "sat" if self.sat else "unsat", "method": self.method}


class NoFastpath(LookupError):
    pass


def fastpath(eq, sigma, injective: bool = False) -> FastpathVerdict:
    """Answer from a closed form if one covers this query, else raise :class:`NoFastpath`."""
    eq = as_equation(eq)
    sigma = check_reduced(sigma)
    if not sigma:
        raise ValueError("sigma must be nonempty")
    if len(sigma) == 1 and not injective:
        # scaling sigma by a nonzero constant preserves solvability
        return FastpathVerdict(sigma_one_criterion(eq), "fastpath-sigma1")
    if eq.m == 3:
        norm, _ = content_normalize(eq)
        cls = classify_three_var(norm)
        if cls.kind is ThreeVarKind.TRIPLE_SUM_ZERO:
            if not injective:
                return FastpathVerdict(True, "fastpath-3var")  # constant columns
            return FastpathVerdict(three_var_sum_zero_injective(norm, sigma), "fastpath-3var")
        if cls.kind is ThreeVarKind.PAIR_SUM_ZERO:
            c, d, _ = case_two_shape(norm)
            # Schur's equation also has injective solutions for every sigma:
            # rows (a,0,a), (0,a,a) per entry a give distinct columns
            return FastpathVerdict(schur_only_test(c, d), "fastpath-schur")
        # any solution forces a zero-sum subset of the coefficients
        return FastpathVerdict(False, "fastpath-3var")
    raise NoFastpath(f"no closed form for m={eq.m}, len(sigma)={len(sigma)}, injective={injective}")


def general_verdict(eq, sigma, injective: bool = False, **limits) -> FastpathVerdict:
    return FastpathVerdict(solve_in_class(eq, sigma, injective, **limits).sat, "general-solver")

