"""Sparse sequences and Milliken-Taylor sums built from them.

A sequence is M-sparse when every term dominates M times the absolute sum of
everything before it::

    |x[t+1]| > M * (|x[1]| + ... + |x[t]|)

Under that growth, an integer combination ``sum(e_d * x_d)`` with every
``|e_d| < M`` vanishes only when all ``e_d`` vanish, so sums over such a
sequence behave like strings of coefficients.  Indices are 1-based
throughout, matching row ``d`` of a witness matrix to ``x_d``.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, List, Optional, Sequence, Tuple

from .equations import as_equation
from .solver import verify_witness
from .strings import check_reduced, step

SIGN_POLICIES = ("positive", "alternating", "random")


def is_sparse(values: Sequence[int], M: int) -> bool:
    total = 0
    for t, x in enumerate(values):
        if x == 0:
            return False
        if t and abs(x) <= M * total:
            return False
        total += abs(x)
    return True


def max_sparsity(values: Sequence[int]) -> int:
    """Largest M for which ``values`` is M-sparse (1 for a single term)."""
    best = None
    total = 0
    for t, x in enumerate(values):
        if x == 0:
            raise ValueError("sparse sequences have no zero terms")
        if t:
            bound = (abs(x) - 1) // total
            best = bound if best is None else min(best, bound)
        total += abs(x)
    if best is None:
        return 1
    if best < 1:
        raise ValueError(f"{list(values)} is not 1-sparse")
    return best


@dataclass(frozen=True)
class SparseSequence:
    values: Tuple[int, ...]
    M: int

    def __post_init__(self):
        values = tuple(self.values)
        object.__setattr__(self, "values", values)
        if self.M < 1:
            raise ValueError(f"sparsity must be positive, got {self.M}")
        if not is_sparse(values, self.M):
            raise ValueError(f"{list(values)} is not {self.M}-sparse")

    def __len__(self):
        return len(self.values)

    def __getitem__(self, d: int) -> int:
        """1-based access: ``seq[1]`` is the first term."""
        if not 1 <= d <= len(self.values):
            raise IndexError(d)
        return self.values[d - 1]

    def to_json(self) -> dict:
        return {"M": self.M, "values": list(self.values)}


def sparsity_constant(sigma: Sequence[int], eq) -> int:
    """``sum |a_i * c_j| + 1`` over all entries a_i of sigma and coefficients c_j."""
    sigma = check_reduced(sigma)
    if not sigma:
        raise ValueError("sigma must be nonempty")
    coeffs = as_equation(eq).coefficients
    return sum(abs(a * c) for a in sigma for c in coeffs) + 1


def gen_sparse_sequence(
    M: int, length: int, seed: int = 0, signs: str = "positive", jitter: bool = True
) -> SparseSequence:
    """Deterministic M-sparse sequence starting at 1.

    Each next term has magnitude ``M * (sum of previous magnitudes) + 1 + j``
    with ``j`` drawn uniformly from ``[0, M]`` (or 0 when ``jitter`` is off).
    ``signs`` picks the sign of each term after the first.
    """
    if length < 1:
        raise ValueError("length must be at least 1")
    if signs not in SIGN_POLICIES:
        raise ValueError(f"unknown sign policy {signs!r}; choose from {SIGN_POLICIES}")
    rng = random.Random(seed)
    values = [1]
    total = 1
    for t in range(1, length):
        mag = M * total + 1 + (rng.randint(0, M) if jitter else 0)
        if signs == "alternating":
            sign = -1 if t % 2 else 1
        elif signs == "random":
            sign = rng.choice((-1, 1))
        else:
            sign = 1
        values.append(sign * mag)
        total += mag
    return SparseSequence(tuple(values), M)


@dataclass(frozen=True)
class MTElement:
    value: int
    blocks: Tuple[Tuple[int, ...], ...]

    def to_json(self) -> dict:
        return {"value": self.value, "blocks": [list(b) for b in self.blocks]}


def mt_value(sigma: Sequence[int], seq: SparseSequence, blocks) -> int:
    return sum(a * sum(seq[d] for d in block) for a, block in zip(sigma, blocks))


def _block_families(n: int, lo: int, hi: int, size: int) -> Iterator[list]:
    """Ordered families F_1 < ... < F_n of nonempty subsets of [lo, hi], each of size <= ``size``."""
    if n == 0:
        yield []
        return
    for first in range(lo, hi + 1):
        for k in range(0, size):
            for rest in combinations(range(first + 1, hi + 1), k):
                block = (first, *rest)
                for tail in _block_families(n - 1, block[-1] + 1, hi, size):
                    yield [block, *tail]


def mt_enumerate(
    sigma: Sequence[int], seq: SparseSequence, max_index: int, max_block_size: int
) -> List[MTElement]:
    """All block families using indices <= ``max_index`` and blocks of size <= ``max_block_size``.

    Output is sorted lexicographically on the flattened block indices.
    The MT set itself is infinite; these bounds only cut out a finite piece.
    """
    sigma = check_reduced(sigma)
    if not sigma:
        raise ValueError("sigma must be nonempty")
    if max_index > len(seq):
        raise ValueError(f"max_index {max_index} exceeds sequence length {len(seq)}")
    families = [
        tuple(f) for f in _block_families(len(sigma), 1, max_index, max_block_size)
    ]
    families.sort(key=lambda f: [d for block in f for d in block])
    return [MTElement(mt_value(sigma, seq, f), f) for f in families]


def column_blocks(sigma: Sequence[int], column: Sequence[int]) -> Tuple[Tuple[int, ...], ...]:
    """Split a coherent column into the blocks F_1 < ... < F_n it encodes (1-based rows)."""
    sigma = check_reduced(sigma)
    blocks: List[List[int]] = [[] for _ in sigma]
    state = 0
    for d, v in enumerate(column, start=1):
        state = step(sigma, state, v)
        if state < 0:
            raise ValueError(f"column {list(column)} is not coherent with {list(sigma)}")
        if v != 0:
            blocks[state - 1].append(d)
    if state != len(sigma):
        raise ValueError(f"column {list(column)} is not coherent with {list(sigma)}")
    return tuple(tuple(b) for b in blocks)


def instantiate_witness(
    matrix: Sequence[Sequence[int]], eq, sigma: Sequence[int], seq: SparseSequence
) -> Tuple[int, ...]:
    """Turn a witness into integers: ``y_j = sum_d matrix[d][j] * x_d``.

    Row d of the matrix is matched with the d-th term of ``seq``.  Each y_j
    lies in MT(sigma, seq), and ``eq`` vanishes at y because every row does.
    """
    coeffs = as_equation(eq).coefficients
    sigma = check_reduced(sigma)
    rows = [tuple(r) for r in matrix]
    if not verify_witness(coeffs, sigma, rows):
        raise ValueError("matrix is not a witness for this equation and sigma")
    if len(seq) < len(rows):
        raise ValueError(f"sequence has {len(seq)} terms, witness has {len(rows)} rows")
    return tuple(
        sum(row[j] * seq[d] for d, row in enumerate(rows, start=1))
        for j in range(len(coeffs))
    )


def levelwise_cancellation_check(
    level_sums: Sequence[int], seq: SparseSequence, bound_M: int
) -> bool:
    """Whether ``sum_d e_d * x_{d+1}`` vanishes, for ``e = level_sums`` indexed from 0.

    Requires every ``|e_d| < bound_M`` and ``seq`` to be ``bound_M``-sparse.
    Under those hypotheses the sum is zero exactly when every ``e_d`` is; a
    violation raises ``ArithmeticError``.
    """
    e = tuple(level_sums)
    if any(abs(x) >= bound_M for x in e):
        raise ValueError(f"level sums must lie strictly inside (-{bound_M}, {bound_M})")
    if len(seq) < len(e):
        raise ValueError(f"need at least {len(e)} sequence terms, got {len(seq)}")
    if not is_sparse(seq.values, bound_M):
        raise ValueError(f"sequence is not {bound_M}-sparse")
    total = sum(x * seq[d] for d, x in enumerate(e, start=1))
    vanishes = total == 0
    if vanishes != all(x == 0 for x in e):
        raise ArithmeticError(f"levelwise cancellation failed for {list(e)}")
    return vanishes


def mt_decompose(value: int, sigma: Sequence[int], seq: SparseSequence) -> Optional[MTElement]:
    """Recover the block family of an MT sum by greedy extraction from the largest index.

    Works whenever ``seq`` is M-sparse with ``M > 2 * max|a_i|``: at each
    index at most one coefficient from ``{0} | set(sigma)`` leaves a
    remainder small enough to be paid by the earlier terms.  Returns None
    if ``value`` has no representation over ``seq``.
    """
    sigma = check_reduced(sigma)
    A = max(abs(a) for a in sigma)
    if seq.M <= 2 * A:
        raise ValueError(f"sparsity {seq.M} too small for entries up to {A}")
    choices = sorted({0, *sigma})
    prefix_abs = [0]
    for x in seq.values:
        prefix_abs.append(prefix_abs[-1] + abs(x))

    coeffs = [0] * len(seq)
    rest = value
    for d in range(len(seq), 0, -1):
        fits = [a for a in choices if abs(rest - a * seq[d]) <= A * prefix_abs[d - 1]]
        if not fits:
            return None
        coeffs[d - 1] = fits[0]
        rest -= fits[0] * seq[d]
    if rest != 0:
        return None
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    try:
        blocks = column_blocks(sigma, coeffs)
    except ValueError:
        return None
    return MTElement(value, blocks)
