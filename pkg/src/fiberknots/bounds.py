"""Growth-rate bounds from bridge indices and a Seifert-matrix obstruction.

Bridge indices are never computed here.  For the family ``[r, -s, n]`` the
torus bridge index tends to infinity with ``n`` because the two push-offs
of the twisting curve have nonzero linking number; that fact is an
external input to :func:`growth_rate_bound`, as is the hypothesis that the
knot is m-small with genus 2 exterior.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence, Union

__all__ = ["BridgeIndices", "GrowthRate", "growth_rate_bound", "epsilon_target",
           "alexander_from_seifert", "leading_coefficient", "lemma_seifert_matrix",
           "zero_slope_obstruction", "TREFOIL_SEIFERT"]

TREFOIL_SEIFERT = ((-1, 1), (0, -1))


@dataclass(frozen=True)
class BridgeIndices:
    """Bridge index ``b0`` and torus bridge index ``b1``, ``b0 > b1 >= 1``."""

    b0: int
    b1: int

    def __post_init__(self):
        if self.b1 < 1:
            raise ValueError(f"b1 must be positive, got {self.b1}")
        if self.b0 <= self.b1:
            raise ValueError(f"need b0 > b1, got b0={self.b0}, b1={self.b1}")


@dataclass(frozen=True)
class GrowthRate:
    value: Fraction      # min{1 - 1/b1, 1 - 2/b0}
    max_variant: Fraction
    torus_candidate: Fraction
    bridge_candidate: Fraction

    def to_json(self) -> dict:
        return {"min": str(self.value), "max": str(self.max_variant),
                "torus_candidate": str(self.torus_candidate),
                "bridge_candidate": str(self.bridge_candidate)}


def growth_rate_bound(b: BridgeIndices) -> GrowthRate:
    """Growth rate ``min{1 - 1/b1, 1 - 2/b0}`` of the tunnel number.

    Valid for m-small knots in S^3 with genus 2 exteriors; the caller is
    responsible for that.  The max of the two candidates is reported too.

    >>> str(growth_rate_bound(BridgeIndices(9, 4)).value)
    '3/4'
    """
    torus = 1 - Fraction(1, b.b1)
    bridge = 1 - Fraction(2, b.b0)
    return GrowthRate(min(torus, bridge), max(torus, bridge), torus, bridge)


def epsilon_target(eps: Union[Fraction, int, str]) -> int:
    """Least ``b1`` with ``1 - 1/b1 > 1 - eps``, i.e. ``floor(1/eps) + 1``."""
    eps = Fraction(eps)
    if not 0 < eps < 1:
        raise ValueError(f"need 0 < eps < 1, got {eps}")
    return int(1 / eps) + 1


def _poly_mul(p: Sequence[int], q: Sequence[int]) -> List[int]:
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] += a * b
    return out


def alexander_from_seifert(V: Sequence[Sequence[int]]) -> List[int]:
    """``det(V - t V^T)`` for a 2x2 integer matrix, as ascending coefficients.

    Trailing zeros are dropped, so the zero polynomial is ``[]``.  No
    normalisation up to units is applied.

    >>> alexander_from_seifert(TREFOIL_SEIFERT)
    [1, -1, 1]
    """
    (a, b), (c, d) = V
    # entry (i, j) of V - tV^T is V[i][j] - t V[j][i]
    m00, m01 = [a, -a], [b, -c]
    m10, m11 = [c, -b], [d, -d]
    left, right = _poly_mul(m00, m11), _poly_mul(m01, m10)
    coeffs = [x - y for x, y in zip(left, right)]
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def leading_coefficient(coeffs: Sequence[int]) -> int:
    return coeffs[-1] if coeffs else 0


def lemma_seifert_matrix(j: int, sign: int, k: int):
    """Seifert matrix ``[[0, j], [j + sign, k]]`` in a basis whose first
    curve has surface slope 0; ``sign`` is +1 or -1."""
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    return ((0, j), (j + sign, k))


def zero_slope_obstruction(j: int) -> bool:
    """True iff neither ``j(j+1)`` nor ``j(j-1)`` is a unit.

    A product of consecutive integers is even, so this always holds: no
    Seifert matrix of that shape can have the trefoil's monic Alexander
    polynomial.
    """
    return all(j * (j + e) not in (1, -1) for e in (1, -1))
