"""Finite integer strings, their canonical forms and the per-column expansion automaton.

Two strings are equivalent when they agree after deleting every zero and
collapsing runs of equal adjacent entries.  Strings are plain tuples of
Python ints, so arithmetic on entries is always exact.
"""
from __future__ import annotations

from itertools import groupby
from typing import Iterable, Tuple

ZString = Tuple[int, ...]
ReducedString = Tuple[int, ...]


def _as_tuple(s: Iterable[int]) -> ZString:
    out = tuple(s)
    for x in out:
        # bool is an int subclass; reject it along with floats and friends
        if not isinstance(x, int) or isinstance(x, bool):
            raise TypeError(f"string entries must be integers, got {x!r}")
    return out


def reduce(s: Iterable[int]) -> ReducedString:
    """Canonical form: drop zeros first, then collapse runs of equal entries.

    >>> reduce((0, 1, 1, -2, 0, -2, 0, 0, 3, 3, 0, 3))
    (1, -2, 3)
    """
    s = _as_tuple(s)
    return tuple(k for k, _ in groupby(x for x in s if x != 0))


def is_reduced(s: Iterable[int]) -> bool:
    s = _as_tuple(s)
    if any(x == 0 for x in s):
        return False
    return all(a != b for a, b in zip(s, s[1:]))


def are_equivalent(s: Iterable[int], t: Iterable[int]) -> bool:
    return reduce(s) == reduce(t)


def check_reduced(sigma: Iterable[int]) -> ReducedString:
    """Return ``sigma`` as a tuple, raising ``ValueError`` unless it is reduced."""
    sigma = _as_tuple(sigma)
    if not is_reduced(sigma):
        raise ValueError(f"string {list(sigma)} is not reduced")
    return sigma


def is_coherent(s: Iterable[int], sigma: Iterable[int]) -> bool:
    """True when ``s`` lies in the equivalence class of the reduced string ``sigma``."""
    return reduce(s) == check_reduced(sigma)


def allowed_emissions(sigma: Iterable[int], state: int) -> frozenset:
    """Values a coherent string may emit next after matching ``sigma[:state]``.

    Emitting ``sigma[state]`` (0-based, i.e. the next unmatched entry) advances
    the state; emitting 0 or the last matched entry keeps it.
    """
    sigma = check_reduced(sigma)
    n = len(sigma)
    if not 0 <= state <= n:
        raise ValueError(f"state {state} out of range [0, {n}]")
    out = {0}
    if state >= 1:
        out.add(sigma[state - 1])
    if state < n:
        out.add(sigma[state])
    return frozenset(out)


def step(sigma: ReducedString, state: int, value: int) -> int:
    """Automaton transition; returns -1 when ``value`` is not allowed.

    ``sigma`` must already be validated as reduced; this is the hot path of
    the solver and does no checking of its own.
    """
    if value == 0:
        return state
    if state < len(sigma) and value == sigma[state]:
        return state + 1
    if state >= 1 and value == sigma[state - 1]:
        return state
    return -1


def run_automaton(sigma: Iterable[int], s: Iterable[int]) -> int:
    """Final automaton state after reading ``s``, or -1 if ``s`` left the class."""
    sigma = check_reduced(sigma)
    state = 0
    for x in _as_tuple(s):
        state = step(sigma, state, x)
        if state < 0:
            return -1
    return state
