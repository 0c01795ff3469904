"""Naive reference implementations, deliberately independent of torsig.

Plain Fraction arithmetic and double loops straight from the
definitions; slow, but nothing here shares code with the package.
"""

from fractions import Fraction
from math import floor

HALF = Fraction(1, 2)


def saw(x):
    x = Fraction(x)
    if x.denominator == 1:
        return Fraction(0)
    return x - floor(x) - HALF


def jump_set(p, q):
    return sorted(Fraction(k, p) + Fraction(l, q) for k in range(1, p) for l in range(1, q))


def signature_count(p, q, x):
    s = jump_set(p, q)
    inside = sum(1 for y in s if x < y < x + 1)
    return (len(s) - inside) - inside


def dedekind(a, b):
    return sum((saw(Fraction(j, b)) * saw(Fraction(a * j, b)) for j in range(b)), Fraction(0))


def rademacher(a, b, x, y):
    return sum(
        (saw((j + Fraction(y)) / b) * saw(a * (j + Fraction(y)) / b + x) for j in range(b)),
        Fraction(0),
    )


def lattice_count(p, q, C):
    return sum(1 for k in range(p + 1) for l in range(q + 1) if Fraction(k, p) + Fraction(l, q) < 1 - C)


def axis_points(p, q, C):
    return sum(
        1 for k in range(p + 1) for l in range(q + 1) if k * l == 0 and Fraction(k, p) + Fraction(l, q) < 1 - C
    )


def residue_delta(p, q, C, r):
    return sum(1 for k in range(p) for l in range(q) if Fraction(k, p) + Fraction(l, q) + C == r)


def half_count(p, q):
    return sum(1 for k in range(1, p) for l in range(1, q) if Fraction(k, p) + Fraction(l, q) < HALF)


def riemann_integral(p, q):
    """Integral of the signature step function by midpoint evaluation on a j/(2pq) mesh.

    The function is constant between consecutive multiples of 1/(pq).
    """
    pq = p * q
    total = Fraction(0)
    for j in range(pq):
        mid = Fraction(2 * j + 1, 2 * pq)
        total += signature_count(p, q, mid) * Fraction(1, pq)
    return total
