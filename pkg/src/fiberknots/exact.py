"""Projective rationals and minus-convention continued fractions.

A continued fraction ``[b1, ..., bk]`` here means

    1 / (b1 - 1 / (b2 - ... - 1 / bk))

with the empty sequence equal to ``0/1``.  Values live in Q u {1/0}, so
evaluation never divides by zero.
"""
from __future__ import annotations

from math import gcd
from typing import Iterable, Sequence

__all__ = ["ProjectiveRational", "ContinuedFraction", "evaluate", "expand",
           "INFINITY", "ZERO"]


class ProjectiveRational:
    """A reduced pair ``(m, n)`` standing for ``m/n``, with ``1/0`` allowed.

    The representative is canonical: ``n > 0``, or ``(m, n) == (1, 0)``.
    """

    __slots__ = ("m", "n")

    def __init__(self, m: int, n: int = 1):
        m, n = int(m), int(n)
        if m == 0 and n == 0:
            raise ValueError("0/0 is not a projective rational")
        g = gcd(m, n)
        m, n = m // g, n // g
        if n < 0 or (n == 0 and m < 0):
            m, n = -m, -n
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "n", n)

    def __setattr__(self, name, value):
        raise AttributeError("ProjectiveRational is immutable")

    @classmethod
    def parse(cls, text: str) -> "ProjectiveRational":
        """Parse ``"m/n"`` or a bare integer ``"m"``."""
        text = text.strip()
        if "/" in text:
            num, _, den = text.partition("/")
        else:
            num, den = text, "1"
        try:
            return cls(int(num), int(den))
        except ValueError:
            raise ValueError(f"not a projective rational: {text!r}") from None

    @property
    def is_infinite(self) -> bool:
        return self.n == 0

    def reciprocal(self) -> "ProjectiveRational":
        return ProjectiveRational(self.n, self.m)

    def __rsub__(self, other: int) -> "ProjectiveRational":
        # other - m/n; infinity stays infinity
        if self.n == 0:
            return INFINITY
        return ProjectiveRational(other * self.n - self.m, self.n)

    def __eq__(self, other):
        if isinstance(other, ProjectiveRational):
            return self.m == other.m and self.n == other.n
        return NotImplemented

    def __hash__(self):
        return hash((self.m, self.n))

    def __iter__(self):
        yield self.m
        yield self.n

    def __repr__(self):
        return f"ProjectiveRational({self.m}, {self.n})"

    def __str__(self):
        return f"{self.m}/{self.n}"


ZERO = ProjectiveRational(0, 1)
INFINITY = ProjectiveRational(1, 0)


class ContinuedFraction(tuple):
    """Immutable integer coefficient sequence ``[b1, ..., bk]``."""

    def __new__(cls, coefficients: Iterable[int] = ()):
        return super().__new__(cls, (int(b) for b in coefficients))

    @classmethod
    def parse(cls, text: str) -> "ContinuedFraction":
        """Parse a comma separated list such as ``"3,-2,5"``; ``""`` is empty."""
        text = text.strip().strip("[]")
        if not text:
            return cls()
        coefficients = []
        for token in text.split(","):
            try:
                coefficients.append(int(token))
            except ValueError:
                raise ValueError(f"bad coefficient {token.strip()!r}") from None
        return cls(coefficients)

    def value(self) -> ProjectiveRational:
        return evaluate(self)

    def __repr__(self):
        return f"ContinuedFraction({list(self)})"

    def __str__(self):
        return ",".join(str(b) for b in self)


def evaluate(cf: Sequence[int]) -> ProjectiveRational:
    """Exact value of ``cf`` under the minus convention.

    >>> str(evaluate([3, -2, 5]))
    '11/38'
    >>> str(evaluate([3, -2, 0]))
    '1/3'
    """
    # v = 1/(b - v') acts on the pair (p, q) as (p, q) -> (q, b*q - p);
    # the matrix has determinant 1 so (0, 0) never appears.
    p, q = 0, 1
    for b in reversed(cf):
        p, q = q, b * q - p
    return ProjectiveRational(p, q)


def expand(q: ProjectiveRational) -> ContinuedFraction:
    """Canonical greedy minus-expansion of ``q``.

    Each step writes ``1/x = b - x'`` with ``x'`` in ``[0, 1)``, so every
    coefficient after the first is at least 2.  ``0/1`` expands to ``[]``
    and ``1/0`` to ``[0]``.  The length can grow linearly in the size of
    ``q``: ``(N-1)/N`` expands to ``N - 1`` twos.

    >>> list(expand(ProjectiveRational(2, 7)))
    [4, 2]
    """
    if not isinstance(q, ProjectiveRational):
        q = ProjectiveRational(*q)
    if q.is_infinite:
        return ContinuedFraction([0])
    coefficients = []
    m, n = q.m, q.n
    while m != 0:
        # reciprocal n/m; b = ceil(n/m), remainder b - n/m in [0, 1)
        b = -((-n) // m)
        coefficients.append(b)
        m, n = b * m - n, m
        if n < 0:
            m, n = -m, -n
    return ContinuedFraction(coefficients)
