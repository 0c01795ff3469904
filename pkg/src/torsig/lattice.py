"""Lattice points under the line k/p + l/q = 1 - C.

N(p,q;C) counts non-negative (k,l) with k/p + l/q < 1 - C.  The brute
force count is the oracle; Rosen's closed formula, the axis count and
the half-triangle corollaries are checked against it.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .dedekind import dedekind_sum, dedekind_sum_fast, rademacher_sum
from .exact import (
    InvalidInput,
    as_rational,
    int_part,
    is_integer_indicator,
    render,
    require_integer,
    sawtooth_num,
)
from .sigma import TorusKnot

HALF = Fraction(1, 2)


@dataclass(frozen=True)
class TriangleCountArgs:
    p: int
    q: int
    C: Fraction

    def __post_init__(self):
        c = as_rational(self.C)
        object.__setattr__(self, "C", c)
        if self.p < 1 or self.q < 1:
            raise InvalidInput("p and q must be positive")
        if gcd(self.p, self.q) != 1:
            raise InvalidInput("p and q must be coprime")
        if not 0 <= c < 1:
            raise InvalidInput(f"C must lie in [0,1), got {render(c)}")

    @property
    def cpq_integral(self):
        return (self.C * self.p * self.q).denominator == 1


def _dsum(a, b):
    if gcd(a, b) == 1:
        return dedekind_sum_fast(a, b)
    return dedekind_sum(a, b)


def triangle_count_bruteforce(p, q, C):
    """Enumerate the (p+1) x (q+1) grid, one row of l values per k."""
    args = TriangleCountArgs(p, q, C)
    c = args.C
    # k/p + l/q < 1 - C  <=>  (kq + lp) * den < (den - num) * pq
    den = c.denominator
    bound = (den - c.numerator) * p * q
    total = 0
    for k in range(p + 1):
        room = bound - k * q * den
        if room <= 0:
            break
        # l * p * den < room  <=>  l <= (room - 1) // (p * den)
        total += min((room - 1) // (p * den), q) + 1
    return total


def delta(p, q, C, r):
    """Residue pairs 0 <= k < p, 0 <= l < q with k/p + l/q + C = r.

    Counting all non-negative k, l instead breaks Rosen's formula
    whenever Cpq is an integer; the residue range is the one under
    which the formula matches the brute force count.
    """
    args = TriangleCountArgs(p, q, C)
    if not args.cpq_integral:
        return 0
    return _delta(p, q, args.C, r)


def _delta(p, q, c, r):
    target = (r - c) * p * q
    if target.denominator != 1:
        return 0
    t = target.numerator
    # kq + lp = t fixes k mod p
    k = t * pow(q, -1, p) % p if p > 1 else 0
    l, rem = divmod(t - k * q, p)
    return 1 if rem == 0 and 0 <= l < q else 0


def _elementary_terms(p, q, c):
    """Integer numerators shared by the Rosen and interior-count formulas.

    With C = a/D every non-Dedekind term is a multiple of 1/L,
    L = 24 p q D^2.  Returns L and a dict of numerators over L.
    """
    a, D = c.numerator, c.denominator
    pq = p * q
    L = 24 * pq * D * D
    cpq_rem = (a * pq) % D
    return L, {
        "area": 12 * (D - a) ** 2 * pq * pq,  # (1-C)^2 pq / 2
        "edge": 12 * (D - a) * (p + q) * pq * D,  # (1-C)(p+q) / 2
        "ratio": 2 * (p * p + q * q) * D * D,  # q/12p + p/12q
        "psi": 2 * (6 * cpq_rem * cpq_rem - 6 * cpq_rem * D + D * D),  # psi2(Cpq) / 2pq
        "flat": 2 * D * D - 3 * pq * D * D,  # 1/12pq - 1/8
        "saw_cp_cq": 6 * pq * D * (sawtooth_num(a * p, D) + sawtooth_num(a * q, D)),  # (((Cp)) + ((Cq))) / 2
        "saw_cpq": 12 * pq * (D - a) * sawtooth_num(a * pq, D),  # (1-C)((Cpq))
        "eighth": 3 * pq * D * D,  # 1/8
    }


def rosen_expression(p, q, C, sawtooth_coefficient=HALF):
    """Rosen's closed expression for N(p,q;C), as an exact rational.

    The ((Cp)) + ((Cq)) terms carry ``sawtooth_coefficient``; 1/2 is
    correct, 1 is the misprinted variant kept for the errata report.
    """
    args = TriangleCountArgs(p, q, C)
    c = args.C
    L, t = _elementary_terms(p, q, c)
    if args.cpq_integral:
        K = t["flat"]
        d0, d1, d2 = (_delta(p, q, c, r) for r in (0, 1, 2))
    else:
        K, d0, d1, d2 = t["psi"], 0, 0, 0
    coefficient = as_rational(sawtooth_coefficient) * 2
    num = (
        t["area"]
        + t["edge"]
        + t["ratio"]
        + K
        + t["saw_cpq"]
        - t["eighth"] * (7 * d0 + 3 * d1 - d2)
        + 2 * t["eighth"]
    )
    return (
        Fraction(num, L)
        + coefficient * Fraction(t["saw_cp_cq"], L)
        - rademacher_sum(p, q, c * p, 0)
        - rademacher_sum(q, p, c * q, 0)
    )


def triangle_count_rosen(p, q, C):
    return require_integer(rosen_expression(p, q, C), f"Rosen count N({p},{q};{render(as_rational(C))})")


def axis_count(p, q, C):
    """Points of the triangle with k*l = 0."""
    c = TriangleCountArgs(p, q, C).C
    a, b = (1 - c) * p, (1 - c) * q
    return int_part(a) + int_part(b) + 1 - is_integer_indicator(a) - is_integer_indicator(b)


def axis_count_bruteforce(p, q, C):
    c = TriangleCountArgs(p, q, C).C
    bound = (c.denominator - c.numerator) * p * q
    den = c.denominator
    return sum(
        1
        for k in range(p + 1)
        for l in range(q + 1)
        if k * l == 0 and (k * q + l * p) * den < bound
    )


def interior_count(p, q, C):
    """Triangle points with k, l >= 1; needs Cpq not an integer."""
    args = TriangleCountArgs(p, q, C)
    if args.cpq_integral:
        raise InvalidInput(f"C*p*q must not be an integer (C = {render(args.C)})")
    return triangle_count_bruteforce(p, q, args.C) - axis_count(p, q, args.C)


def interior_count_closed(p, q, C):
    """Closed form of the interior count, valid for Cpq not an integer."""
    args = TriangleCountArgs(p, q, C)
    if args.cpq_integral:
        raise InvalidInput(f"C*p*q must not be an integer (C = {render(args.C)})")
    c = args.C
    L, t = _elementary_terms(p, q, c)
    num = t["area"] - t["edge"] + t["ratio"] + 2 * t["eighth"] - t["saw_cp_cq"] + t["saw_cpq"] + t["psi"]
    value = Fraction(num, L) - rademacher_sum(p, q, c * p, 0) - rademacher_sum(q, p, c * q, 0)
    return require_integer(value, f"interior count M({p},{q};{render(c)})")


def half_count(knot):
    """S(p,q): jump set elements below 1/2, by direct count."""
    p, q = knot.p, knot.q
    pq = p * q
    total = 0
    for k in range(1, p):
        # 2(kq + lp) < pq  <=>  l <= (pq - 2kq - 1) / (2p)
        lmax = min((pq - 2 * k * q - 1) // (2 * p), q - 1)
        if lmax >= 1:
            total += lmax
    return total


def half_triangle_count_closed(p, q):
    """N(p,q;1/2) from the half-triangle corollary of Rosen's formula.

    Two cases: p, q both odd, or exactly one even (moved into q).
    """
    if gcd(p, q) != 1:
        raise InvalidInput("p and q must be coprime")
    if p % 2 and q % 2:
        value = (
            Fraction(p * q, 8)
            + Fraction(p + q, 4)
            + Fraction(q, 6 * p)
            + Fraction(p, 6 * q)
            + Fraction(1, 24 * p * q)
            - _dsum(2 * p, q)
            - _dsum(2 * q, p)
        )
    else:
        if p % 2 == 0:
            p, q = q, p
        value = Fraction(p * q, 8) + Fraction(p + q, 4) - _dsum(2 * p, q) + 2 * _dsum(p, q)
    return require_integer(value, f"N({p},{q};1/2)")


def half_count_closed(knot):
    p, q = knot.p, knot.q
    n = half_triangle_count_closed(p, q)
    if p % 2 and q % 2:
        return n - (p + q) // 2
    return n - (p + q - 1) // 2


def special_case_half_count(p, n):
    """S(p, np+1) = (q-1)(p-1)^2 / (8p) for p odd, n even."""
    if p < 3 or p % 2 == 0:
        raise InvalidInput(f"p must be odd and >= 3, got {p}")
    if n < 2 or n % 2:
        raise InvalidInput(f"n must be even and >= 2, got {n}")
    q = n * p + 1
    return Fraction((q - 1) * (p - 1) ** 2, 8 * p)


def mirror_case_half_count(q, n):
    """S(nq+1, q) = (p-1)(q-1)^2 / (8q) for q odd, n even."""
    if q < 3 or q % 2 == 0:
        raise InvalidInput(f"q must be odd and >= 3, got {q}")
    if n < 2 or n % 2:
        raise InvalidInput(f"n must be even and >= 2, got {n}")
    p = n * q + 1
    return Fraction((p - 1) * (q - 1) ** 2, 8 * q)
