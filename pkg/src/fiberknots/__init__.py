"""Exact invariants of knots on the once-punctured torus fiber of the trefoil."""
from .bounds import (BridgeIndices, GrowthRate, alexander_from_seifert, epsilon_target,
                     growth_rate_bound, zero_slope_obstruction)
from .curves import (A, B, CurveClass, FamilyParams, TwistLetter, apply_twist_word,
                     curve_from_cf, family_word, intersection, invert_word, k0_class,
                     knot_class, ktw_class, twist_linearity_check)
from .exact import ContinuedFraction, ProjectiveRational, evaluate, expand
from .genus import (BraidCounts, NotPositivelyRepresentable, braid_counts,
                    euler_characteristic, fibered_genus, ktw_genus, to_cb_basis)
from .smallness import (CriterionInapplicable, SmallnessProblem, SurfaceWitness,
                        enumerate_witnesses, family_smallness_scan, is_small)
from .surgery import DegenerateTwist, SurgeryDescription, c7_description, export, l7_description

__version__ = "0.1.0"
