"""Surgery descriptions of the family ``[r, -s, n]`` on seven-component links.

``L7`` realises the twist word ``tau_b^-r tau_a^s tau_b^-n (a)``: each
factor ``tau^k`` becomes ``(1/k, -1/k)`` surgery on the pair of push-offs
``(c-, c+)`` of its curve, slopes measured against the fiber framing.  The
unfilled component ``L0`` is the knot itself.

``C7`` is the minimally twisted seven-chain link.  Filling six of its
components along ``r, -s, n, -n-1, s, -r`` gives the same exterior; the
seventh component is the core ``K*``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Tuple

from .curves import FamilyParams
from .exact import ProjectiveRational

__all__ = ["DegenerateTwist", "SurgeryDescription", "l7_description",
           "c7_description", "export"]


class DegenerateTwist(ValueError):
    """A twist count is zero, so its push-off pair has no ``1/k`` slope."""


# slope None marks the unfilled (knot) component
Component = Tuple[str, Optional[ProjectiveRational]]


@dataclass(frozen=True)
class SurgeryDescription:
    link_name: str
    components: Tuple[Component, ...]
    params: FamilyParams
    notes: Tuple[str, ...] = ()

    def __post_init__(self):
        if self.link_name not in ("L7", "C7"):
            raise ValueError(f"unknown link {self.link_name!r}")
        if len(self.components) != 7:
            raise ValueError("a description needs exactly 7 components")
        if sum(slope is None for _, slope in self.components) != 1:
            raise ValueError("exactly one component must be unfilled")

    @property
    def unfilled_label(self) -> str:
        return next(label for label, slope in self.components if slope is None)

    def slopes(self) -> Tuple[Optional[ProjectiveRational], ...]:
        return tuple(slope for _, slope in self.components)


def l7_description(p: FamilyParams) -> SurgeryDescription:
    """Annular-twist surgery description on ``L7``.

    Pairs, innermost first: ``L-1, L1`` (b, ``k = -n``), ``L-2, L2``
    (a, ``k = s``), ``L-3, L3`` (b, ``k = -r``).  ``c-`` gets ``1/k``.
    """
    twists = {1: -p.n, 2: p.s, 3: -p.r}
    for depth, k in twists.items():
        if k == 0:
            raise DegenerateTwist(
                f"twist count for pair L-{depth}, L{depth} is zero (n={p.n})")
    components = []
    for i in range(-3, 4):
        if i == 0:
            components.append(("L0", None))
            continue
        k = twists[abs(i)]
        slope = ProjectiveRational(1, k) if i < 0 else ProjectiveRational(-1, k)
        components.append((f"L{i}", slope))
    notes = ("slopes relative to fiber framing",
             "L0 is K^n; pair (L-i, Li) carries (1/k, -1/k)")
    return SurgeryDescription("L7", tuple(components), p, notes)


def c7_description(p: FamilyParams, figure_variant: bool = False) -> SurgeryDescription:
    """Filling description on ``C7``.

    ``figure_variant`` replaces the fourth slope ``-n-1`` by ``-n+1``; the
    two readings disagree and the default is ``-n-1``.
    """
    r, s, n = p.r, p.s, p.n
    fourth = -n + 1 if figure_variant else -n - 1
    slopes = (r, -s, n, fourth, s, -r)
    components = [(str(i), ProjectiveRational(v)) for i, v in enumerate(slopes, 1)]
    components.append(("7", None))
    notes = ("fourth slope " + ("-n+1 (figure variant)" if figure_variant else "-n-1"),
             "component 7 is K*; meridian and fiber framing of K^n "
             "correspond to longitude and meridian of K*")
    return SurgeryDescription("C7", tuple(components), p, notes)


def export(d: SurgeryDescription) -> str:
    """Line-based text rendering; deterministic and newline terminated."""
    p = d.params
    lines = [f"link {d.link_name} params r={p.r} s={p.s} n={p.n}"]
    lines.extend(f"# {note}" for note in d.notes)
    for label, slope in d.components:
        if slope is None:
            lines.append(f"component {label} UNFILLED")
        else:
            lines.append(f"component {label} slope {slope.m}/{slope.n}")
    return "\n".join(lines) + "\n"
