"""Closed formulas for the signature invariants of T(p,q).

Every function here has a brute-force twin in :mod:`torsig.sigma`; the
signature formulas check integrality of their result before returning.
"""

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Optional, Union

from .dedekind import dedekind_sum, dedekind_sum_fast, rademacher_sum, s1_closed
from .exact import InvalidInput, render, require_integer, sawtooth
from .sigma import (
    SpectralParameter,
    TorusKnot,
    _as_parameter,
    integral_bruteforce,
    ordinary_signature_bruteforce,
    signature_at,
)


class Route(str, enum.Enum):
    BRUTEFORCE = "bruteforce"
    CLOSED_FORM = "closed_form"
    DEDEKIND_ROUTE = "dedekind_route"


@dataclass(frozen=True)
class SignatureResult:
    value: Union[int, Fraction]
    route: Route
    knot: TorusKnot
    parameter: Optional[SpectralParameter] = None


def _dsum(a, b):
    if gcd(a, b) == 1:
        return dedekind_sum_fast(a, b)
    return dedekind_sum(a, b)


def integral_closed(knot):
    p, q = knot.p, knot.q
    return -Fraction(1, 3) * (p - Fraction(1, p)) * (q - Fraction(1, q))


def integral_via_dedekind(knot, printed=False):
    """Signature integral as 4(s(p,q) + s(q,p) - s(1,pq)).

    ``printed=True`` gives -4(s(p,q) + s(q,p) + s(1,pq)), which does
    not agree with the integral; it is only evaluated for the errata
    report.
    """
    p, q = knot.p, knot.q
    pair = dedekind_sum_fast(p, q) + dedekind_sum_fast(q, p)
    if printed:
        return -4 * (pair + s1_closed(p * q))
    return 4 * (pair - s1_closed(p * q))


def _mixed_parity(knot):
    """(odd, even) ordering of a mixed-parity pair."""
    p, q = knot.p, knot.q
    if p % 2 == 0:
        p, q = q, p
    return p, q


def ordinary_signature_expression(knot, printed=False):
    """Closed expression for the ordinary signature as a rational.

    In the mixed-parity case the Dedekind terms enter as
    -4 s(2p,q) + 8 s(p,q) with p odd; ``printed=True`` flips both
    signs, the variant that disagrees with the count.
    """
    p, q = knot.p, knot.q
    if p % 2 and q % 2:
        return (
            -Fraction(p * q, 2)
            + Fraction(2 * p, 3 * q)
            + Fraction(2 * q, 3 * p)
            + Fraction(1, 6 * p * q)
            - 4 * (_dsum(2 * p, q) + _dsum(2 * q, p))
            - 1
        )
    p, q = _mixed_parity(knot)
    sign = -1 if printed else 1
    return -Fraction(p * q, 2) + 1 + sign * (-4 * _dsum(2 * p, q) + 8 * _dsum(p, q))


def ordinary_signature_closed(knot):
    return require_integer(ordinary_signature_expression(knot), f"ordinary signature of {knot}")


def _check_off_lattice(knot, c):
    if c == 0 or (c * knot.pq).denominator == 1:
        raise InvalidInput(
            f"C*p*q = {render(c * knot.pq)} is an integer; the closed formula excludes this C"
        )


def signature_expression(knot, c):
    c = _as_parameter(c)
    _check_off_lattice(knot, c)
    p, q = knot.p, knot.q
    pq = p * q
    w = sawtooth(c * pq)
    return (
        -2 * (c - c * c) * pq
        + Fraction(q, 3 * p)
        + Fraction(p, 3 * q)
        + (2 - 4 * c) * w
        + Fraction(2, pq) * (w * w - Fraction(1, 12))
        - 2
        * (
            rademacher_sum(p, q, c * p, 0)
            + rademacher_sum(q, p, c * q, 0)
            + rademacher_sum(p, q, (1 - c) * p, 0)
            + rademacher_sum(q, p, (1 - c) * q, 0)
        )
    )


def signature_closed(knot, c):
    """Tristram-Levine signature at exp(2 pi i C), C*p*q not an integer."""
    value = signature_expression(knot, c)
    return require_integer(value, f"signature of {knot} at C = {render(_as_parameter(c))}")


def signature_envelope_defect(knot, c):
    """Distance of the signature from the parabola 2pq(C^2 - C)."""
    c = _as_parameter(c)
    return signature_closed(knot, c) - 2 * knot.pq * (c * c - c)


def envelope_bound(knot):
    """An upper bound for |signature_envelope_defect| over all admissible C.

    Term by term: q/3p + p/3q, |(2-4C)((Cpq))| <= 1,
    (2/pq)|((Cpq))^2 - 1/12| <= 1/(3pq), and each shifted sum
    s(a,b;x,0) is at most b/8 in size because its first factor sums to
    about b/4 in absolute value and the second is at most 1/2.
    """
    p, q = knot.p, knot.q
    return Fraction(q, 3 * p) + Fraction(p, 3 * q) + 1 + Fraction(1, 3 * p * q) + Fraction(p + q, 2)


def evaluate(quantity, knot, route, parameter=None):
    """Compute ``quantity`` ('integral', 'ordinary', 'signature') along ``route``."""
    route = Route(route)
    spectral = SpectralParameter(parameter) if parameter is not None else None
    if quantity == "integral":
        fn = {
            Route.BRUTEFORCE: integral_bruteforce,
            Route.CLOSED_FORM: integral_closed,
            Route.DEDEKIND_ROUTE: integral_via_dedekind,
        }[route]
        return SignatureResult(fn(knot), route, knot)
    if quantity == "ordinary":
        if route is Route.DEDEKIND_ROUTE:
            route = Route.CLOSED_FORM
        fn = ordinary_signature_bruteforce if route is Route.BRUTEFORCE else ordinary_signature_closed
        return SignatureResult(fn(knot), route, knot)
    if quantity == "signature":
        if spectral is None:
            raise InvalidInput("signature needs a spectral parameter")
        if route is Route.BRUTEFORCE:
            value = signature_at(knot, spectral.C)
        else:
            value = signature_closed(knot, spectral)
        return SignatureResult(value, route, knot, spectral)
    raise InvalidInput(f"unknown quantity {quantity!r}")
