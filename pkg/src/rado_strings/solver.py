"""Decide whether an equation has a solution whose columns all reduce to sigma.

A witness is a k x m integer matrix: every column, read top to bottom, is
coherent with sigma, and every row annihilates the coefficient vector.  Each
column is tracked by the expansion automaton of :mod:`rado_strings.strings`,
so a witness is a path in the product of m such automata where every step
emits a row ``v`` with ``v . c == 0``.  Breadth-first search over the finite
product therefore decides existence, and the first path found is the
witness with the fewest rows, ties broken by the lexicographically smallest
sequence of rows.

Injective mode additionally needs the columns to be pairwise distinct.  Two
columns differ exactly when some row tells them apart, so it is enough to
carry one "has differed" bit per unordered pair of columns.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations, product
from typing import Dict, List, Optional, Sequence, Tuple

from .strings import check_reduced, reduce, step

DEFAULT_MAX_STATES = 50_000_000

Row = Tuple[int, ...]
Matrix = Tuple[Row, ...]


class IndeterminateError(RuntimeError):
    """The search hit a resource limit before deciding; this is never UNSAT."""

    def __init__(self, reason: str, states_explored: int):
        super().__init__(f"search indeterminate ({reason}) after {states_explored} states")
        self.reason = reason
        self.states_explored = states_explored

    def to_json(self) -> dict:
        return {"status": "indeterminate", "reason": self.reason}


@dataclass(frozen=True)
class SolverVerdict:
    status: str  # "sat" or "unsat"
    witness: Optional[Matrix] = None
    states_explored: int = 0
    frontier_peak: int = 0

    @property
    def sat(self) -> bool:
        return self.status == "sat"

    @property
    def k(self) -> Optional[int]:
        return None if self.witness is None else len(self.witness)

    def columns(self) -> Tuple[Row, ...]:
        if self.witness is None:
            return ()
        return tuple(zip(*self.witness))

    def to_json(self) -> dict:
        if self.sat:
            return {"status": "sat", "k": self.k, "rows": [list(r) for r in self.witness]}
        return {"status": "unsat"}


def _coefficients(eq) -> Tuple[int, ...]:
    coeffs = tuple(getattr(eq, "coefficients", eq))
    if not coeffs or any(c == 0 for c in coeffs):
        raise ValueError(f"coefficients must be nonzero, got {list(coeffs)}")
    return coeffs


def _pair_bits(m: int) -> List[Tuple[int, int, int]]:
    return [(j, l, 1 << b) for b, (j, l) in enumerate(combinations(range(m), 2))]


def solve_in_class(
    eq,
    sigma: Sequence[int],
    injective: bool = False,
    *,
    max_states: int = DEFAULT_MAX_STATES,
    nonconstant: bool = False,
) -> SolverVerdict:
    """Search for a witness matrix for ``eq`` in the class of ``sigma``.

    ``nonconstant`` asks only that not all columns be equal (a weaker
    demand than ``injective``).  Raises :class:`IndeterminateError` once
    more than ``max_states`` states have been visited.
    """
    coeffs = _coefficients(eq)
    sigma = check_reduced(sigma)
    if not sigma:
        raise ValueError("sigma must be a nonempty reduced string")
    m, n = len(coeffs), len(sigma)
    track_pairs = injective or nonconstant
    pairs = _pair_bits(m) if track_pairs else []
    full_mask = (1 << len(pairs)) - 1

    # sorted per-state emission lists; product() over sorted lists is lex ordered
    emissions = []
    for q in range(n + 1):
        vals = {0}
        if q >= 1:
            vals.add(sigma[q - 1])
        if q < n:
            vals.add(sigma[q])
        emissions.append(sorted(vals))

    move_cache: Dict[Tuple[int, ...], list] = {}

    def moves(cols):
        hit = move_cache.get(cols)
        if hit is not None:
            return hit
        out = []
        for row in product(*(emissions[q] for q in cols)):
            if not any(row):
                continue
            if sum(c * v for c, v in zip(coeffs, row)):
                continue
            nxt = tuple(step(sigma, q, v) for q, v in zip(cols, row))
            bits = 0
            for j, l, bit in pairs:
                if row[j] != row[l]:
                    bits |= bit
            out.append((row, nxt, bits))
        move_cache[cols] = out
        return out

    def accepting(cols, mask):
        if any(q != n for q in cols):
            return False
        if injective:
            return mask == full_mask
        if nonconstant:
            return mask != 0
        return True

    start = ((0,) * m, 0)
    parent: Dict[tuple, Optional[Tuple[tuple, Row]]] = {start: None}
    frontier = deque([start])
    peak = 1
    goal = None

    while frontier and goal is None:
        peak = max(peak, len(frontier))
        cols, mask = frontier.popleft()
        for row, nxt, bits in moves(cols):
            state = (nxt, mask | bits)
            if state in parent:
                continue
            parent[state] = ((cols, mask), row)
            if accepting(*state):
                goal = state
                break
            if len(parent) > max_states:
                raise IndeterminateError("state-limit", len(parent))
            frontier.append(state)

    if goal is None:
        return SolverVerdict("unsat", None, len(parent), peak)

    rows = []
    state = goal
    while parent[state] is not None:
        state, row = parent[state]
        rows.append(row)
    witness = tuple(reversed(rows))
    if not verify_witness(coeffs, sigma, witness, injective=injective, canonical=True):
        raise RuntimeError(f"solver produced an invalid witness {witness}")
    return SolverVerdict("sat", witness, len(parent), peak)


def verify_witness(
    eq,
    sigma: Sequence[int],
    matrix: Sequence[Sequence[int]],
    injective: bool = False,
    *,
    canonical: bool = False,
) -> bool:
    """Check a witness directly from the definitions, without the automaton.

    With ``canonical=True`` all-zero rows are also rejected.
    """
    coeffs = _coefficients(eq)
    sigma = tuple(sigma)
    rows = [tuple(r) for r in matrix]
    for r in rows:
        if len(r) != len(coeffs):
            raise ValueError(f"row {list(r)} has {len(r)} entries, expected {len(coeffs)}")
    if not rows:
        return reduce(()) == sigma
    if any(sum(c * v for c, v in zip(coeffs, r)) != 0 for r in rows):
        return False
    if canonical and any(not any(r) for r in rows):
        return False
    cols = list(zip(*rows))
    if any(reduce(col) != sigma for col in cols):
        return False
    if injective and len(set(cols)) != len(cols):
        return False
    return True


@dataclass(frozen=True)
class OracleVerdict:
    status: str  # "sat" or "unsat-up-to-bound"
    witness: Optional[Matrix]
    max_rows: int

    @property
    def sat(self) -> bool:
        return self.status == "sat"


def brute_force_oracle(eq, sigma: Sequence[int], injective: bool, max_rows: int) -> OracleVerdict:
    """Exhaustive search over matrices with at most ``max_rows`` rows.

    Entries range over ``{0} | set(sigma)``.  All-zero rows are skipped:
    deleting one keeps every column in its class, so they never matter.
    Candidate matrices are generated row by row in increasing k, then in lex
    order, and a prefix is abandoned as soon as some column's reduced form
    is no longer a prefix of sigma.  The first matrix accepted by
    :func:`verify_witness` is returned, so for the same k the answer should
    coincide with :func:`solve_in_class`.  Cost grows like
    ``len(values) ** (k * m)`` in the worst case; small instances only.
    """
    coeffs = _coefficients(eq)
    sigma = tuple(sigma)
    m = len(coeffs)
    values = sorted({0, *sigma})
    rows = [
        r for r in product(values, repeat=m)
        if any(r) and sum(c * v for c, v in zip(coeffs, r)) == 0
    ]

    def viable(cols):
        for col in cols:
            red = reduce(col)
            if red != sigma[: len(red)]:
                return False
        return True

    def search(prefix, k):
        if len(prefix) == k:
            if verify_witness(coeffs, sigma, prefix, injective):
                return tuple(prefix)
            return None
        for r in rows:
            prefix.append(r)
            if viable(zip(*prefix)):
                hit = search(prefix, k)
                if hit is not None:
                    return hit
            prefix.pop()
        return None

    for k in range(1, max_rows + 1):
        hit = search([], k)
        if hit is not None:
            return OracleVerdict("sat", hit, max_rows)
    return OracleVerdict("unsat-up-to-bound", None, max_rows)
