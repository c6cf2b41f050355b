"""Linear homogeneous equations ``c1*x1 + ... + cm*xm = 0``."""
from __future__ import annotations

import re
from dataclasses import dataclass
from functools import reduce as _fold
from math import gcd
from typing import Iterable, Optional, Tuple


class EquationParseError(ValueError):
    """Raised for malformed equation text; ``token`` names the offending piece."""

    def __init__(self, message: str, token: str = ""):
        super().__init__(f"{message}: {token!r}" if token else message)
        self.token = token


@dataclass(frozen=True)
class LinearEquation:
    coefficients: Tuple[int, ...]

    def __post_init__(self):
        coeffs = tuple(self.coefficients)
        for c in coeffs:
            if not isinstance(c, int) or isinstance(c, bool):
                raise TypeError(f"coefficient {c!r} is not an integer")
        if len(coeffs) < 2:
            raise ValueError("an equation needs at least two variables")
        if any(c == 0 for c in coeffs):
            raise ValueError(f"zero coefficient in {list(coeffs)}")
        object.__setattr__(self, "coefficients", coeffs)

    @property
    def m(self) -> int:
        return len(self.coefficients)

    def __len__(self):
        return len(self.coefficients)

    def __iter__(self):
        return iter(self.coefficients)

    def evaluate(self, values: Iterable[int]) -> int:
        values = tuple(values)
        if len(values) != self.m:
            raise ValueError(f"expected {self.m} values, got {len(values)}")
        return sum(c * v for c, v in zip(self.coefficients, values))

    def to_json(self) -> dict:
        return {"coefficients": list(self.coefficients)}

    def __str__(self):
        return render(self)


def as_equation(eq) -> LinearEquation:
    if isinstance(eq, LinearEquation):
        return eq
    return LinearEquation(tuple(eq))


_TERM = re.compile(r"([+-])?\s*(\d*)\s*\*?\s*x(\d+)")


def parse_equation(text: str) -> LinearEquation:
    """Parse text such as ``"4x1+2x2+3x3-5x4-x5-2x6=0"``.

    Every index ``1..m`` must occur exactly once, in any order; a trailing
    ``= 0`` is optional.
    """
    body = text.strip()
    if "=" in body:
        body, _, rhs = body.partition("=")
        if rhs.strip() != "0":
            raise EquationParseError("right-hand side must be 0", rhs.strip())
    body = body.strip()
    if not body:
        raise EquationParseError("empty equation")

    found = {}
    pos = 0
    while pos < len(body):
        while pos < len(body) and body[pos].isspace():
            pos += 1
        if pos >= len(body):
            break
        match = _TERM.match(body, pos)
        if match is None or (match.group(1) is None and found):
            rest = body[pos:].split()[0] if body[pos:].split() else body[pos:]
            raise EquationParseError("malformed term", rest)
        token = match.group(0).strip()
        sign = -1 if match.group(1) == "-" else 1
        magnitude = int(match.group(2)) if match.group(2) else 1
        index = int(match.group(3))
        if magnitude == 0:
            raise EquationParseError("zero coefficient", token)
        if index == 0:
            raise EquationParseError("variable indices start at 1", token)
        if index in found:
            raise EquationParseError("repeated variable", token)
        found[index] = sign * magnitude
        pos = match.end()

    m = max(found)
    missing = [i for i in range(1, m + 1) if i not in found]
    if missing:
        raise EquationParseError("missing variable", f"x{missing[0]}")
    try:
        return LinearEquation(tuple(found[i] for i in range(1, m + 1)))
    except ValueError as exc:
        raise EquationParseError(str(exc)) from exc


def render(eq) -> str:
    """Inverse of :func:`parse_equation`, e.g. ``"x1+x2-x3=0"``."""
    parts = []
    for i, c in enumerate(as_equation(eq).coefficients, start=1):
        sign = "-" if c < 0 else ("+" if parts else "")
        mag = "" if abs(c) == 1 else str(abs(c))
        parts.append(f"{sign}{mag}x{i}")
    return "".join(parts) + "=0"


def is_rado(eq) -> Tuple[bool, Optional[Tuple[int, ...]]]:
    """Rado's condition: some nonempty subset of the coefficients sums to zero.

    Returns ``(True, I)`` with the lexicographically least 1-based index tuple
    ``I``, or ``(False, None)``.  The search is exhaustive over all 2**m - 1
    subsets, so keep m at about 20 or below.
    """
    coeffs = as_equation(eq).coefficients
    m = len(coeffs)

    # preorder DFS over increasing index sequences visits subsets in lex order
    def search(start, total, chosen):
        for i in range(start, m):
            chosen.append(i + 1)
            s = total + coeffs[i]
            if s == 0:
                return tuple(chosen)
            hit = search(i + 1, s, chosen)
            if hit:
                return hit
            chosen.pop()
        return None

    witness = search(0, 0, [])
    return (witness is not None, witness)


def content(eq) -> int:
    return _fold(gcd, (abs(c) for c in as_equation(eq).coefficients))


def content_normalize(eq) -> Tuple[LinearEquation, int]:
    eq = as_equation(eq)
    g = content(eq)
    return LinearEquation(tuple(c // g for c in eq.coefficients)), g
