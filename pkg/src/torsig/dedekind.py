"""Dedekind sums, Dedekind-Rademacher sums and their reciprocity laws.

Both sums run over a full residue system j = 0 .. b-1 of the modulus b.
Terms are accumulated as integers over a fixed common denominator and
converted to a Fraction once, which keeps the O(b) oracles cheap enough
to sweep large grids.
"""

from fractions import Fraction
from math import gcd

from .exact import InvalidInput, as_rational, is_integer_indicator, psi2, sawtooth, sawtooth_num


def _check_modulus(b):
    if isinstance(b, bool) or not isinstance(b, int) or b < 1:
        raise InvalidInput(f"modulus must be a positive integer, got {b!r}")


def dedekind_sum(a, b):
    """s(a,b) = sum_{j mod b} ((j/b)) ((a j/b)).

    No coprimality needed; s(2p, q) with q even is used by the ordinary
    signature formula.
    """
    _check_modulus(b)
    total = 0
    for j in range(1, b):
        total += (2 * j - b) * sawtooth_num(a * j, b)
    # each factor is a numerator over 2b
    return Fraction(total, 4 * b * b)


def dedekind_sum_fast(a, b):
    """s(a,b) in O(log b) steps via reciprocity and periodicity."""
    _check_modulus(b)
    if gcd(a, b) != 1:
        raise InvalidInput(f"dedekind_sum_fast needs gcd(a,b) = 1, got gcd({a},{b}) = {gcd(a, b)}")
    a %= b
    # s(a,b) = R(a,b) - s(b mod a, a), R(a,b) = (a/b + b/a + 1/ab)/12 - 1/4
    num, den, sign = 0, 1, 1
    while b > 1 and a:
        term_num = a * a + b * b + 1 - 3 * a * b
        term_den = 12 * a * b
        num = num * term_den + sign * term_num * den
        den *= term_den
        a, b = b % a, a
        sign = -sign
    return Fraction(num, den)


def rademacher_sum(a, b, x, y):
    """s(a,b;x,y) = sum_{j mod b} (((j+y)/b)) ((a(j+y)/b + x))."""
    _check_modulus(b)
    x, y = as_rational(x), as_rational(y)
    xn, xd = x.numerator, x.denominator
    yn, yd = y.numerator, y.denominator
    # (j+y)/b = (j yd + yn) / (b yd)
    # a(j+y)/b + x = (a (j yd + yn) xd + xn b yd) / (b yd xd)
    d1 = b * yd
    d2 = d1 * xd
    shift = xn * d1
    total = 0
    for j in range(b):
        n1 = j * yd + yn
        f1 = sawtooth_num(n1, d1)
        if f1:
            total += f1 * sawtooth_num(a * n1 * xd + shift, d2)
    return Fraction(total, 4 * d1 * d2)


def reciprocity_rhs(p, q):
    return Fraction(1, 12) * (Fraction(p, q) + Fraction(q, p) + Fraction(1, p * q)) - Fraction(1, 4)


def reciprocity_defect(p, q):
    """s(p,q) + s(q,p) minus the Dedekind reciprocity right-hand side. Always 0."""
    return dedekind_sum(p, q) + dedekind_sum(q, p) - reciprocity_rhs(p, q)


def rademacher_reciprocity_rhs(p, q, x, y, printed=False):
    """Right-hand side of Rademacher's reciprocity for s(p,q;x,y) + s(q,p;y,x).

    The correct law weights psi2(y) by p/q and psi2(x) by q/p.  With
    ``printed=True`` the two weights are exchanged, which is the
    variant that does not hold.
    """
    x, y = as_rational(x), as_rational(y)
    wy, wx = Fraction(p, q), Fraction(q, p)
    if printed:
        wy, wx = wx, wy
    return (
        -Fraction(1, 4) * is_integer_indicator(x) * is_integer_indicator(y)
        + sawtooth(x) * sawtooth(y)
        + Fraction(1, 2) * (wy * psi2(y) + Fraction(1, p * q) * psi2(p * y + q * x) + wx * psi2(x))
    )


def rademacher_reciprocity_defect(p, q, x, y):
    x, y = as_rational(x), as_rational(y)
    lhs = rademacher_sum(p, q, x, y) + rademacher_sum(q, p, y, x)
    return lhs - rademacher_reciprocity_rhs(p, q, x, y)


def s1_closed(c):
    """s(1,c) = (c-1)(c-2)/(12c)."""
    _check_modulus(c)
    return Fraction((c - 1) * (c - 2), 12 * c)


def dedekind_sum_short_range(a, b):
    """s(a,b) summed over j = 0 .. a-1 instead of a full residue system.

    Kept only so the validation harness can show that this reading
    breaks reciprocity.
    """
    total = Fraction(0)
    for j in range(max(a, 0)):
        total += sawtooth(Fraction(j, b)) * sawtooth(Fraction(a * j, b))
    return total
