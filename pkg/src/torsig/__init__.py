"""Exact signatures of torus knots.

Brute-force counting over the jump set and closed formulas built from
Dedekind and Dedekind-Rademacher sums, evaluated in exact rational
arithmetic so that the two routes can be compared for equality.
"""

from .exact import frac_part, int_part, is_integer_indicator, psi2, render, sawtooth, parse_rational
from .sigma import (
    JumpPointError,
    SigmaSet,
    SignatureProfile,
    SpectralParameter,
    TorusKnot,
    integral_bruteforce,
    ordinary_signature_bruteforce,
    sigma_set,
    signature_at,
    signature_profile,
    tau,
)
from .dedekind import (
    dedekind_sum,
    dedekind_sum_fast,
    rademacher_reciprocity_defect,
    rademacher_sum,
    reciprocity_defect,
    s1_closed,
)
from .lattice import (
    axis_count,
    delta,
    half_count,
    half_count_closed,
    interior_count,
    special_case_half_count,
    triangle_count_bruteforce,
    triangle_count_rosen,
)
from .closed_forms import (
    SignatureResult,
    integral_closed,
    integral_via_dedekind,
    ordinary_signature_closed,
    signature_closed,
    signature_envelope_defect,
)

__version__ = "0.1.0"
