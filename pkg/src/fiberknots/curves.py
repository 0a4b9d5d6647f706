"""Curves on the once-punctured torus fiber of the trefoil.

A simple closed curve is recorded by its homology class ``m[a] + n[b]``
for the basis curves ``a`` and ``b`` (which meet once).  Curves are
unoriented, so ``(m, n)`` and ``(-m, -n)`` are the same class.

Dehn twists act on homology by ``x -> x + k<x, d> d`` with the algebraic
intersection form normalised to ``<a, b> = -1``.  With that choice the
word ``tau_b^-r tau_a^s tau_b^-n`` sends ``a`` to ``(sn+1, rsn+r+n)``.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable, Sequence, Tuple

from .exact import ContinuedFraction, ProjectiveRational, evaluate

__all__ = [
    "CurveClass", "TwistLetter", "TwistWord", "FamilyParams",
    "A", "B", "curve_from_cf", "intersection", "algebraic_intersection",
    "twist", "apply_twist_word", "invert_word", "family_word",
    "knot_class", "ktw_class", "k0_class", "twist_linearity_check",
    "family_cf",
]


@dataclass(frozen=True, order=True)
class CurveClass:
    """Unoriented class ``m[a] + n[b]`` with ``gcd(|m|, |n|) = 1``.

    Constructing from any sign representative gives the canonical one
    (``n > 0``, or ``(1, 0)``).
    """

    m: int
    n: int

    def __post_init__(self):
        m, n = int(self.m), int(self.n)
        if (m, n) == (0, 0):
            raise ValueError("(0, 0) is not a curve class")
        if gcd(m, n) != 1:
            raise ValueError(f"({m}, {n}) is not primitive; not a simple closed curve")
        if n < 0 or (n == 0 and m < 0):
            m, n = -m, -n
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "n", n)

    @classmethod
    def from_rational(cls, q: ProjectiveRational) -> "CurveClass":
        return cls(q.m, q.n)

    @classmethod
    def parse(cls, text: str) -> "CurveClass":
        """``"a"``, ``"b"``, ``"m/n"`` or ``"m,n"``."""
        text = text.strip()
        if text == "a":
            return A
        if text == "b":
            return B
        sep = "/" if "/" in text else ","
        num, _, den = text.strip("()").partition(sep)
        try:
            return cls(int(num), int(den))
        except ValueError:
            raise ValueError(f"not a curve class: {text!r}") from None

    def as_tuple(self) -> Tuple[int, int]:
        return (self.m, self.n)

    def __str__(self):
        return f"({self.m}, {self.n})"


A = CurveClass(1, 0)
B = CurveClass(0, 1)


@dataclass(frozen=True)
class TwistLetter:
    curve: CurveClass
    exponent: int

    def __post_init__(self):
        if self.exponent == 0:
            raise ValueError("twist exponent must be nonzero")

    def __str__(self):
        if self.curve == A:
            name = "a"
        elif self.curve == B:
            name = "b"
        else:
            name = f"{self.curve.m}/{self.curve.n}"
        return f"{name}^{self.exponent}"


# Letters are written left to right and applied right to left.
TwistWord = Tuple[TwistLetter, ...]


@dataclass(frozen=True)
class FamilyParams:
    """Parameters of the knot ``[r, -s, n]``; requires ``r >= 3, s >= 2``."""

    r: int
    s: int
    n: int

    def __post_init__(self):
        if self.r < 3 or self.s < 2:
            raise ValueError(f"need r >= 3 and s >= 2, got r={self.r}, s={self.s}")


def curve_from_cf(cf: Sequence[int]) -> CurveClass:
    """Curve class of the knot named by the continued fraction ``cf``."""
    return CurveClass.from_rational(evaluate(cf))


def algebraic_intersection(x: Sequence[int], y: Sequence[int]) -> int:
    """Signed intersection ``<x, y>`` of (signed) homology pairs, ``<a, b> = -1``."""
    return x[1] * y[0] - x[0] * y[1]


def intersection(c1: CurveClass, c2: CurveClass) -> int:
    """Geometric intersection number ``|m1 n2 - n1 m2|``."""
    return abs(c1.m * c2.n - c1.n * c2.m)


def twist(x: Tuple[int, int], curve: CurveClass, k: int = 1) -> Tuple[int, int]:
    """``k`` positive Dehn twists along ``curve`` acting on the signed pair ``x``."""
    t = k * algebraic_intersection(x, (curve.m, curve.n))
    return (x[0] + t * curve.m, x[1] + t * curve.n)


def _apply_signed(word: Iterable[TwistLetter], x: Tuple[int, int]) -> Tuple[int, int]:
    for letter in reversed(tuple(word)):
        x = twist(x, letter.curve, letter.exponent)
    return x


def apply_twist_word(word: Iterable[TwistLetter], c: CurveClass) -> CurveClass:
    """Image of ``c`` under the composition ``word`` (rightmost letter first)."""
    return CurveClass(*_apply_signed(word, (c.m, c.n)))


def invert_word(word: Iterable[TwistLetter]) -> TwistWord:
    return tuple(TwistLetter(l.curve, -l.exponent) for l in reversed(tuple(word)))


def family_word(p: FamilyParams) -> TwistWord:
    """``tau_b^-r . tau_a^s . tau_b^-n`` with zero exponents dropped."""
    letters = [(B, -p.r), (A, p.s), (B, -p.n)]
    return tuple(TwistLetter(c, k) for c, k in letters if k != 0)


def family_cf(p: FamilyParams) -> ContinuedFraction:
    return ContinuedFraction([p.r, -p.s, p.n])


def _family_pair(r: int, s: int, n: int) -> Tuple[int, int]:
    return (s * n + 1, r * s * n + r + n)


def knot_class(p: FamilyParams) -> CurveClass:
    """Class ``(sn+1, rsn+r+n)`` of ``K^n = [r, -s, n]``."""
    m, n = _family_pair(p.r, p.s, p.n)
    if gcd(m, n) != 1:
        # (rsn+r+n) - r(sn+1) = n and (sn+1) - s*n = 1, so this cannot happen
        raise RuntimeError(f"internal error: family class ({m}, {n}) not primitive")
    return CurveClass(m, n)


def ktw_class(r: int, s: int) -> CurveClass:
    """The twisting curve ``[r, -s]``, class ``(s, rs+1)``."""
    return CurveClass(s, r * s + 1)


def k0_class(r: int) -> CurveClass:
    """``K^0 = [r, -s, 0]``, class ``(1, r)`` for every ``s``."""
    return CurveClass(1, r)


def twist_linearity_check(p: FamilyParams) -> bool:
    """Check ``[K^n] = n[K^tw] + [K^0]`` on raw (uncanonicalised) pairs."""
    r, s, n = p.r, p.s, p.n
    lhs = _family_pair(r, s, n)
    rhs = (n * s + 1, n * (r * s + 1) + r)
    return lhs == rhs
