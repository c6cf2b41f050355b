"""Seeded random agreement checks between the closed forms, the solver and the oracle."""
from __future__ import annotations

import random
from typing import List, Tuple

from .characterizations import (
    reduce_to_adjacent_pair,
    sigma_one_criterion,
    three_var_sum_zero_injective,
)
from .equations import LinearEquation, content_normalize
from .solver import brute_force_oracle, solve_in_class


def random_nonzero(rng: random.Random, bound: int) -> int:
    x = 0
    while x == 0:
        x = rng.randint(-bound, bound)
    return x


def random_equation(rng: random.Random, m_min: int, m_max: int, bound: int) -> LinearEquation:
    m = rng.randint(m_min, m_max)
    return LinearEquation(tuple(random_nonzero(rng, bound) for _ in range(m)))


def random_reduced(rng: random.Random, max_len: int, bound: int) -> Tuple[int, ...]:
    """Nonempty reduced string of length <= max_len, entries in [-bound, bound] minus 0."""
    n = rng.randint(1, max_len)
    out: List[int] = []
    while len(out) < n:
        x = random_nonzero(rng, bound)
        if not out or out[-1] != x:
            out.append(x)
    return tuple(out)


def random_zero_sum_triple(rng: random.Random, bound: int) -> LinearEquation:
    while True:
        c1, c2 = random_nonzero(rng, bound), random_nonzero(rng, bound)
        c3 = -c1 - c2
        if c3 != 0 and abs(c3) <= bound:
            return content_normalize(LinearEquation((c1, c2, c3)))[0]


def sigma_one_suite(trials: int, seed: int) -> List[dict]:
    rng = random.Random(seed)
    bad = []
    for _ in range(trials):
        eq = random_equation(rng, 2, 5, 4)
        fast = sigma_one_criterion(eq)
        slow = solve_in_class(eq, (1,), injective=False).sat
        if fast != slow:
            bad.append({"suite": "sigma1", "eq": list(eq), "fastpath": fast, "solver": slow})
    return bad


def three_var_suite(trials: int, seed: int) -> List[dict]:
    rng = random.Random(seed)
    bad = []
    for _ in range(trials):
        eq = random_zero_sum_triple(rng, 5)
        sigma = random_reduced(rng, 3, 5)
        fast = three_var_sum_zero_injective(eq, sigma)
        slow = solve_in_class(eq, sigma, injective=True).sat
        h = reduce_to_adjacent_pair(eq, sigma)
        pairwise = any(
            solve_in_class(eq, pair, injective=True).sat for pair in zip(sigma, sigma[1:])
        )
        if not (fast == slow == (h is not None) == pairwise):
            bad.append({
                "suite": "3var", "eq": list(eq), "sigma": list(sigma),
                "fastpath": fast, "solver": slow, "h": h, "pairwise": pairwise,
            })
    return bad


def oracle_suite(trials: int, seed: int, unsat_bound: int = 4) -> List[dict]:
    rng = random.Random(seed)
    bad = []
    for _ in range(trials):
        eq = random_equation(rng, 2, 3, 3)
        sigma = random_reduced(rng, 2, 2)
        injective = rng.random() < 0.5
        verdict = solve_in_class(eq, sigma, injective)
        bound = verdict.k if verdict.sat else unsat_bound
        oracle = brute_force_oracle(eq, sigma, injective, bound)
        if verdict.sat != oracle.sat or (verdict.sat and verdict.witness != oracle.witness):
            bad.append({
                "suite": "oracle", "eq": list(eq), "sigma": list(sigma), "injective": injective,
                "solver": verdict.to_json(), "oracle": oracle.status,
            })
    return bad


def run_all(trials: int, seed: int) -> dict:
    results = {
        "sigma1": sigma_one_suite(trials, seed),
        "3var": three_var_suite(trials, seed + 1),
        "oracle": oracle_suite(trials, seed + 2),
    }
    return {
        "trials": trials,
        "seed": seed,
        "disagreements": sum(len(v) for v in results.values()),
        "suites": {k: {"disagreements": v} for k, v in results.items()},
    }
