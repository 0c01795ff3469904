"""Brute-force signature function of a torus knot.

The jump set of T(p,q) is the (p-1)(q-1) numbers k/p + l/q.  For x in
(0,1) away from jumps the Tristram-Levine signature at exp(2 pi i x) is

    #{y outside (x, x+1)} - #{y inside (x, x+1)}.

Everything below is counting over that set.  Elements are kept as
integer numerators j = kq + lp over the common denominator pq, so the
hot paths are integer comparisons and bisection.
"""

import bisect
import json
import os
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from math import gcd

from .exact import InvalidInput, as_rational, render, parse_rational

STREAMING_ENV = "TORSIG_STREAMING"
# Above this many elements the jump set is never materialised.
STREAMING_THRESHOLD = 10**7


class JumpPointError(InvalidInput):
    """The requested point is a jump of the signature function."""


@dataclass(frozen=True)
class TorusKnot:
    p: int
    q: int

    def __post_init__(self):
        p, q = self.p, self.q
        if isinstance(p, bool) or isinstance(q, bool) or not isinstance(p, int) or not isinstance(q, int):
            raise InvalidInput("p and q must be integers")
        if p < 2 or q < 2:
            raise InvalidInput("p and q must be at least 2")
        if gcd(p, q) != 1:
            raise InvalidInput("p and q must be coprime")

    @property
    def pq(self):
        return self.p * self.q

    @property
    def genus_count(self):
        """Size of the jump set, (p-1)(q-1)."""
        return (self.p - 1) * (self.q - 1)

    def canonical(self):
        """The same knot with p <= q."""
        if self.p <= self.q:
            return self
        return TorusKnot(self.q, self.p)

    def __str__(self):
        return f"T({self.p},{self.q})"


@dataclass(frozen=True)
class SpectralParameter:
    """A rational C in [0,1) standing for z = exp(2 pi i C)."""

    C: Fraction

    def __post_init__(self):
        c = as_rational(self.C)
        if not 0 <= c < 1:
            raise InvalidInput(f"spectral parameter must lie in [0,1), got {render(c)}")
        object.__setattr__(self, "C", c)


def _as_parameter(c):
    if isinstance(c, SpectralParameter):
        return c.C
    return SpectralParameter(as_rational(c)).C


@dataclass(frozen=True)
class SigmaSet:
    knot: TorusKnot
    numerators: tuple  # sorted; element j stands for j/(pq)

    @cached_property
    def elements(self):
        pq = self.knot.pq
        return [Fraction(j, pq) for j in self.numerators]

    def __len__(self):
        return len(self.numerators)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, y):
        y = as_rational(y)
        pq = self.knot.pq
        if (y * pq).denominator != 1:
            return False
        j = int(y * pq)
        i = bisect.bisect_left(self.numerators, j)
        return i < len(self.numerators) and self.numerators[i] == j

    def count_open(self, lo, hi):
        """Number of elements in the open interval (lo/pq, hi/pq); lo, hi rational."""
        nums = self.numerators
        # j > lo  <=>  j >= floor(lo) + 1
        left = bisect.bisect_left(nums, _floor(lo) + 1)
        # j < hi  <=>  j <= ceil(hi) - 1
        right = bisect.bisect_right(nums, -_floor(-hi) - 1)
        return max(0, right - left)


def _floor(x):
    x = as_rational(x)
    return x.numerator // x.denominator


@lru_cache(maxsize=64)
def _sigma_numerators(p, q):
    return tuple(sorted(k * q + l * p for k in range(1, p) for l in range(1, q)))


def sigma_set(knot):
    knot = knot.canonical()
    return SigmaSet(knot, _sigma_numerators(knot.p, knot.q))


def streaming_enabled(knot=None):
    if os.environ.get(STREAMING_ENV, "") not in ("", "0"):
        return True
    return knot is not None and knot.genus_count > STREAMING_THRESHOLD


def in_sigma(knot, y):
    """Membership test in O(1) memory, via the unique k = j q^-1 mod p."""
    y = as_rational(y)
    p, q = knot.p, knot.q
    pq = p * q
    scaled = y * pq
    if scaled.denominator != 1:
        return False
    j = scaled.numerator
    if not 0 < j < 2 * pq:
        return False
    k = j * pow(q, -1, p) % p
    if k == 0:
        return False
    l, rem = divmod(j - k * q, p)
    return rem == 0 and 1 <= l <= q - 1


def is_jump(knot, x):
    """True when x or x+1 belongs to the jump set."""
    x = as_rational(x)
    return in_sigma(knot, x) or in_sigma(knot, x + 1)


def _count_window_streaming(knot, x):
    """Elements of the jump set in (x, x+1) without storing the set."""
    knot = knot.canonical()
    p, q = knot.p, knot.q
    pq = p * q
    a, b = x.numerator, x.denominator
    pb = p * b
    total = 0
    for k in range(1, p):
        kqb = k * q * b
        # need a*pq < (kq + lp) * b < (a+b)*pq
        lmin = (a * pq - kqb) // pb + 1
        lmax = -((kqb - (a + b) * pq) // pb) - 1
        lo, hi = max(lmin, 1), min(lmax, q - 1)
        if hi >= lo:
            total += hi - lo + 1
    return total


def _count_window(knot, x):
    if streaming_enabled(knot):
        return _count_window_streaming(knot, x)
    s = sigma_set(knot)
    pq = knot.pq
    return s.count_open(x * pq, (x + 1) * pq)


def signature_at(knot, x):
    """Signature at exp(2 pi i x) by direct counting.

    x must lie in (0,1) and must not be a jump (x or x+1 in the jump
    set).  Points with x*pq integral that are not jumps are accepted;
    the count is locally constant there.
    """
    x = as_rational(x)
    if not 0 < x < 1:
        raise InvalidInput(f"x must lie in (0,1), got {render(x)}")
    if is_jump(knot, x):
        raise JumpPointError(f"{render(x)} is a jump point of the signature function of {knot}")
    inside = _count_window(knot, x)
    return knot.genus_count - 2 * inside


def ordinary_signature_bruteforce(knot):
    return signature_at(knot, Fraction(1, 2))


@dataclass(frozen=True)
class SignatureProfile:
    p: int
    q: int
    breakpoints: tuple
    values: tuple

    def intervals(self):
        edges = (Fraction(0),) + tuple(self.breakpoints) + (Fraction(1),)
        return [(edges[i], edges[i + 1], v) for i, v in enumerate(self.values)]

    def value_at(self, x):
        """Value on the open interval containing x (x not a breakpoint)."""
        x = as_rational(x)
        i = bisect.bisect_left(self.breakpoints, x)
        if i < len(self.breakpoints) and self.breakpoints[i] == x:
            raise JumpPointError(f"{render(x)} is a breakpoint")
        return self.values[i]

    def integral(self):
        return sum(((right - left) * v for left, right, v in self.intervals()), Fraction(0))

    def minimum(self):
        return min(self.values)

    def to_dict(self):
        return {
            "p": self.p,
            "q": self.q,
            "breakpoints": [render(b) for b in self.breakpoints],
            "values": list(self.values),
        }

    def to_json(self):
        return json.dumps(self.to_dict(), separators=(",", ":"))

    @classmethod
    def from_json(cls, text):
        data = json.loads(text)
        return cls(
            data["p"],
            data["q"],
            tuple(parse_rational(b) for b in data["breakpoints"]),
            tuple(int(v) for v in data["values"]),
        )

    def to_tsv(self):
        rows = [f"{render(l)}\t{render(r)}\t{v}" for l, r, v in self.intervals()]
        return "\n".join(rows) + "\n"


def signature_profile(knot):
    """The full step function x -> signature on (0,1)."""
    s = sigma_set(knot)
    pq = knot.pq
    candidates = sorted({j % pq for j in s.numerators})
    edges = [0] + candidates + [pq]
    values = []
    for lo, hi in zip(edges, edges[1:]):
        # count elements in (mid, mid + pq) with mid the interval midpoint
        mid2 = lo + hi
        inside = s.count_open(Fraction(mid2, 2), Fraction(mid2, 2) + pq)
        values.append(knot.genus_count - 2 * inside)

    breakpoints, kept = [], [values[0]]
    for c, v in zip(candidates, values[1:]):
        if v != kept[-1]:
            breakpoints.append(Fraction(c, pq))
            kept.append(v)
    return SignatureProfile(knot.p, knot.q, tuple(breakpoints), tuple(kept))


def integral_bruteforce(knot):
    """Integral of the signature over (0,1): -sum over the jump set of 1 - 2|y-1|."""
    pq = knot.pq
    if streaming_enabled(knot):
        p, q = knot.p, knot.q
        total = sum(pq - 2 * abs(k * q + l * p - pq) for k in range(1, p) for l in range(1, q))
    else:
        total = sum(pq - 2 * abs(j - pq) for j in sigma_set(knot).numerators)
    return -Fraction(total, pq)


def tau(knot, m):
    """Sum of signatures at the nontrivial m-th roots of unity.

    gcd(m, pq) = 1 guarantees no k/m is a jump.  Otherwise the sum is
    still taken when every k/m misses the jumps (m = 2 for T(2,3)), and
    refused when one of them hits.
    """
    if isinstance(m, bool) or not isinstance(m, int) or m < 1:
        raise InvalidInput(f"m must be a positive integer, got {m!r}")
    points = [Fraction(k, m) for k in range(1, m)]
    if gcd(m, knot.pq) != 1:
        hit = next((x for x in points if is_jump(knot, x)), None)
        if hit is not None:
            raise JumpPointError(
                f"gcd(m, pq) = {gcd(m, knot.pq)} and {render(hit)} is a jump point of the signature function of {knot}"
            )
    if streaming_enabled(knot) or knot.genus_count > m:
        return sum(signature_at(knot, x) for x in points)
    # each jump j/pq lies in (k/m, k/m + 1) for m(j - pq) < k pq < m j
    pq = knot.pq
    inside = 0
    for j in sigma_set(knot).numerators:
        lo = max(m * (j - pq) // pq + 1, 1)
        hi = min((m * j - 1) // pq, m - 1)
        if hi >= lo:
            inside += hi - lo + 1
    return (m - 1) * knot.genus_count - 2 * inside
