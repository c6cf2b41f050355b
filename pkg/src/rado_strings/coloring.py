"""Finite colorings of [-N, N] minus zero and a search for monochromatic solutions.

This only gathers finite evidence; it does not decide partition regularity.
"""
from __future__ import annotations

import json
import random
from dataclasses import dataclass
from itertools import product
from typing import Dict, Iterator, Optional, Tuple

from .equations import as_equation


@dataclass(frozen=True)
class Coloring:
    N: int
    r: int
    colors: Dict[int, int]

    def __post_init__(self):
        if self.N < 1 or self.r < 1:
            raise ValueError("N and r must be positive")
        for x in domain(self.N):
            c = self.colors.get(x)
            if c is None:
                raise ValueError(f"coloring is missing {x}")
            if not 1 <= c <= self.r:
                raise ValueError(f"color {c} of {x} outside [1, {self.r}]")

    def __getitem__(self, x: int) -> int:
        return self.colors[x]

    def to_json(self) -> dict:
        return {"N": self.N, "r": self.r, "colors": {str(x): self.colors[x] for x in domain(self.N)}}

    @classmethod
    def from_json(cls, data: dict) -> "Coloring":
        return cls(int(data["N"]), int(data["r"]), {int(k): int(v) for k, v in data["colors"].items()})


def domain(N: int) -> Iterator[int]:
    """1, -1, 2, -2, ..., N, -N: small magnitudes first."""
    for x in range(1, N + 1):
        yield x
        yield -x


def random_coloring(N: int, r: int, seed: int) -> Coloring:
    rng = random.Random(seed)
    return Coloring(N, r, {x: rng.randint(1, r) for x in domain(N)})


def parity_coloring(N: int) -> Coloring:
    return Coloring(N, 2, {x: 1 if x % 2 else 2 for x in domain(N)})


def sign_coloring(N: int) -> Coloring:
    return Coloring(N, 2, {x: 1 if x > 0 else 2 for x in domain(N)})


def load_coloring(source: str, N: int) -> Coloring:
    """``random:r:seed`` over [-N, N], or the path of a JSON coloring file covering N."""
    if source.startswith("random:"):
        parts = source.split(":")
        if len(parts) != 3:
            raise ValueError(f"expected random:r:seed, got {source!r}")
        return random_coloring(N, int(parts[1]), int(parts[2]))
    if source in ("parity", "sign"):
        return parity_coloring(N) if source == "parity" else sign_coloring(N)
    with open(source) as fh:
        coloring = Coloring.from_json(json.load(fh))
    if coloring.N < N:
        raise ValueError(f"coloring file covers N={coloring.N}, asked for N={N}")
    if coloring.N > N:
        coloring = Coloring(N, coloring.r, {x: coloring[x] for x in domain(N)})
    return coloring


def color_check(eq, coloring: Coloring) -> Optional[Tuple[int, ...]]:
    """First monochromatic nonzero solution in [-N, N], or None.

    The last variable is solved for, so the cost is O((2N) ** (m - 1)).
    """
    coeffs = as_equation(eq).coefficients
    *head, last = coeffs
    N = coloring.N
    values = list(domain(N))
    for xs in product(values, repeat=len(head)):
        color = coloring[xs[0]]
        if any(coloring[x] != color for x in xs[1:]):
            continue
        partial = sum(c * x for c, x in zip(head, xs))
        if partial % last:
            continue
        y = -partial // last
        if y == 0 or abs(y) > N or coloring[y] != color:
            continue
        return (*xs, y)
    return None
