"""Closed essential surfaces in continued-fraction knot exteriors.

For a knot ``[b1, ..., bk]`` with ``|b1| >= 3`` and ``|bi| >= 2`` otherwise,
closed essential surfaces in the exterior correspond one to one with pairs
of index sets ``I, J`` of ``{1, ..., k}`` such that

1. ``1`` is not in both ``I`` and ``J``;
2. neither ``I`` nor ``J`` contains two consecutive indices;
3. if ``1 in I``:     ``sum_J b - sum_I b == 0``;
4. if ``1 not in I``: ``sum_J b - (sum_I b + 1) == 0``.

The knot is small exactly when no such pair exists.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple, Union

__all__ = [
    "CriterionInapplicable", "SmallnessProblem", "SurfaceWitness",
    "ONE_IN_I", "ONE_NOT_IN_I", "independent_subsets", "witness_sum",
    "is_valid_witness", "enumerate_witnesses", "is_small", "ScanEntry",
    "family_smallness_scan",
]

ONE_IN_I = "1 in I"
ONE_NOT_IN_I = "1 not in I"


class CriterionInapplicable(ValueError):
    """Coefficients violate ``|b1| >= 3`` or ``|bi| >= 2``."""


@dataclass(frozen=True)
class SmallnessProblem:
    coefficients: Tuple[int, ...]

    def __post_init__(self):
        coefficients = tuple(int(b) for b in self.coefficients)
        object.__setattr__(self, "coefficients", coefficients)
        if not coefficients:
            raise CriterionInapplicable("empty coefficient list")
        if abs(coefficients[0]) < 3:
            raise CriterionInapplicable(f"|b1| = {abs(coefficients[0])} < 3")
        for i, b in enumerate(coefficients[1:], start=2):
            if abs(b) < 2:
                raise CriterionInapplicable(f"|b{i}| = {abs(b)} < 2")


@dataclass(frozen=True)
class SurfaceWitness:
    I: Tuple[int, ...]
    J: Tuple[int, ...]
    condition: str
    sum_value: int

    def to_json(self) -> dict:
        return {"I": list(self.I), "J": list(self.J),
                "condition": self.condition, "sum_value": self.sum_value}


def independent_subsets(k: int) -> List[Tuple[int, ...]]:
    """All subsets of ``{1..k}`` without consecutive elements, sorted.

    There are Fibonacci(k + 2) of them.
    """
    out: List[Tuple[int, ...]] = []

    def extend(prefix: Tuple[int, ...], start: int) -> None:
        out.append(prefix)
        for i in range(start, k + 1):
            extend(prefix + (i,), i + 2)

    extend((), 1)
    out.sort()
    return out


def witness_sum(coefficients: Sequence[int], I: Sequence[int], J: Sequence[int]) -> int:
    """Left-hand side of whichever sum equation applies to ``(I, J)``."""
    sum_i = sum(coefficients[i - 1] for i in I)
    sum_j = sum(coefficients[j - 1] for j in J)
    if 1 in I:
        return sum_j - sum_i
    return sum_j - (sum_i + 1)


def _no_consecutive(indices: Sequence[int]) -> bool:
    s = sorted(indices)
    return all(b - a > 1 for a, b in zip(s, s[1:]))


def is_valid_witness(coefficients: Sequence[int], w: SurfaceWitness) -> bool:
    """Re-check every condition on ``w`` from scratch."""
    k = len(coefficients)
    if not all(1 <= i <= k for i in (*w.I, *w.J)):
        return False
    if 1 in w.I and 1 in w.J:
        return False
    if not (_no_consecutive(w.I) and _no_consecutive(w.J)):
        return False
    expected = ONE_IN_I if 1 in w.I else ONE_NOT_IN_I
    value = witness_sum(coefficients, w.I, w.J)
    return w.condition == expected and value == w.sum_value == 0


def _problem(p: Union[SmallnessProblem, Sequence[int]]) -> SmallnessProblem:
    return p if isinstance(p, SmallnessProblem) else SmallnessProblem(tuple(p))


def enumerate_witnesses(p: Union[SmallnessProblem, Sequence[int]]) -> List[SurfaceWitness]:
    """Every witness pair ``(I, J)``, ordered lexicographically by ``(I, J)``.

    >>> [(w.I, w.J) for w in enumerate_witnesses([3, -2, 3])]
    [((1,), (3,))]
    """
    b = _problem(p).coefficients
    subsets = independent_subsets(len(b))
    by_sum: Dict[int, List[Tuple[int, ...]]] = defaultdict(list)
    for J in subsets:
        by_sum[sum(b[j - 1] for j in J)].append(J)

    witnesses = []
    for I in subsets:
        sum_i = sum(b[i - 1] for i in I)
        if 1 in I:
            target, condition = sum_i, ONE_IN_I
        else:
            target, condition = sum_i + 1, ONE_NOT_IN_I
        for J in by_sum.get(target, ()):
            if 1 in I and 1 in J:
                continue
            witnesses.append(SurfaceWitness(I, J, condition, 0))
    witnesses.sort(key=lambda w: (w.I, w.J))
    return witnesses


def is_small(p: Union[SmallnessProblem, Sequence[int]]) -> bool:
    """True iff the exterior has no closed essential surface."""
    return not enumerate_witnesses(p)


@dataclass(frozen=True)
class ScanEntry:
    n: int
    applicable: bool
    small: Optional[bool] = None
    witnesses: Tuple[SurfaceWitness, ...] = field(default_factory=tuple)
    reason: Optional[str] = None

    def to_json(self) -> dict:
        return {"n": self.n, "applicable": self.applicable, "small": self.small,
                "witnesses": [w.to_json() for w in self.witnesses],
                "reason": self.reason}


def family_smallness_scan(r: int, s: int, n_min: int, n_max: int) -> Dict[int, ScanEntry]:
    """Smallness of ``[r, -s, n]`` for ``n_min <= n <= n_max``.

    Values of ``n`` where the criterion does not apply are recorded as
    inapplicable entries rather than raised.
    """
    if r < 3 or s < 2:
        raise ValueError(f"need r >= 3 and s >= 2, got r={r}, s={s}")
    if n_min > n_max:
        raise ValueError(f"empty range [{n_min}, {n_max}]")
    result = {}
    for n in range(n_min, n_max + 1):
        try:
            witnesses = enumerate_witnesses([r, -s, n])
        except CriterionInapplicable as exc:
            result[n] = ScanEntry(n, False, reason=str(exc))
            continue
        result[n] = ScanEntry(n, True, not witnesses, tuple(witnesses))
    return result
