"""Genus of fibered knots on the fiber via positive braid closures.

Changing basis to ``c = a + b`` and ``b``, a class ``p[c] + q[b]`` with
``p, q >= 0`` coprime closes up from a positive braid on ``p + q``
strands with ``pq + p(p-1) + q(q-1)`` crossings.  Positive braid closures
are fibered, and the fiber's Euler characteristic is strands minus
crossings.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Tuple

from .curves import CurveClass

__all__ = ["NotPositivelyRepresentable", "BraidCounts", "to_cb_basis",
           "braid_counts", "euler_characteristic", "fibered_genus", "ktw_genus"]


class NotPositivelyRepresentable(ValueError):
    """The class has no representative ``p[c] + q[b]`` with ``p, q >= 0``."""


@dataclass(frozen=True)
class BraidCounts:
    p: int
    q: int
    strands: int
    crossings: int


def to_cb_basis(c: CurveClass) -> Tuple[int, int]:
    """Rewrite ``m[a] + n[b]`` as ``p[c] + q[b]`` with ``p, q >= 0``."""
    p, q = c.m, c.n - c.m
    if p >= 0 and q >= 0:
        return p, q
    if p <= 0 and q <= 0:
        return -p, -q
    raise NotPositivelyRepresentable(
        f"class {c} is ({p}, {q}) in the (c, b) basis; mixed signs")


def _check_pq(p: int, q: int) -> None:
    if p < 0 or q < 0:
        raise ValueError(f"p, q must be non-negative, got ({p}, {q})")
    if gcd(p, q) != 1:
        raise ValueError(f"p, q must be coprime and not both zero, got ({p}, {q})")


def braid_counts(p: int, q: int) -> BraidCounts:
    _check_pq(p, q)
    return BraidCounts(p, q, p + q, p * q + p * (p - 1) + q * (q - 1))


def euler_characteristic(p: int, q: int) -> int:
    """Euler characteristic ``2(p+q) - (p^2 + q^2 + pq)`` of the fiber surface."""
    counts = braid_counts(p, q)
    return counts.strands - counts.crossings


def fibered_genus(c: CurveClass) -> int:
    """Genus of the knot ``c`` when it is a positive braid closure.

    >>> fibered_genus(CurveClass(2, 7))
    13
    """
    p, q = to_cb_basis(c)
    _check_pq(p, q)
    twice = p * p + q * q + p * q + 1
    if twice % 2:
        raise RuntimeError(f"internal error: odd p^2+q^2+pq+1 for ({p}, {q})")
    return twice // 2 - (p + q)


def ktw_genus(r: int, s: int) -> int:
    """Closed-form genus ``(s^2(r^2-r+1) - s)/2`` of ``[r, -s]``."""
    if r < 3 or s < 2:
        raise ValueError(f"need r >= 3 and s >= 2, got r={r}, s={s}")
    return (s * s * (r * r - r + 1) - s) // 2
