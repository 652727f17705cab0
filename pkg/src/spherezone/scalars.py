"""Exact arithmetic over the rationals and the quadratic field Q(sqrt 5).

Two layers live here.  ``ExactScalar`` is the public interchange type: a pair
of arbitrary-precision rationals (a, b) denoting a + b*sqrt(5), with exact ring
arithmetic and exact sign determination.  ``QuadInt`` is the integer kernel
used inside the geometry hot paths: after lines are canonicalized their
coefficients are integral, so predicates never need rational arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, sqrt

RING_RATIONAL = "rational"
RING_QSQRT5 = "q-sqrt5"

_SQRT5 = sqrt(5.0)


def int_sign(x):
    """Sign of a plain integer (or Fraction), in {-1, 0, +1}."""
    if x > 0:
        return 1
    if x < 0:
        return -1
    return 0


def _quad_sign(a, b):
    """Sign of a + b*sqrt(5) for exact rational/integer a, b.

    If either part is zero the other decides.  If both parts agree in sign
    that sign wins.  Otherwise compare a^2 against 5 b^2: the result carries
    the sign of whichever side dominates, i.e. sign(a) * sign(a^2 - 5 b^2).
    """
    sa = int_sign(a)
    sb = int_sign(b)
    if sb == 0:
        return sa
    if sa == 0:
        return sb
    if sa == sb:
        return sa
    return sa * int_sign(a * a - 5 * b * b)


class QuadInt:
    """Element a + b*sqrt(5) of Z[sqrt(5)]; the exact integer kernel scalar."""

    __slots__ = ("a", "b")

    def __init__(self, a, b=0):
        self.a = a
        self.b = b

    def __add__(self, other):
        if isinstance(other, int):
            return QuadInt(self.a + other, self.b)
        return QuadInt(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            return QuadInt(self.a - other, self.b)
        return QuadInt(self.a - other.a, self.b - other.b)

    def __rsub__(self, other):
        if isinstance(other, int):
            return QuadInt(other - self.a, -self.b)
        return QuadInt(other.a - self.a, other.b - self.b)

    def __neg__(self):
        return QuadInt(-self.a, -self.b)

    def __mul__(self, other):
        if isinstance(other, int):
            return QuadInt(self.a * other, self.b * other)
        return QuadInt(
            self.a * other.a + 5 * self.b * other.b,
            self.a * other.b + self.b * other.a,
        )

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, int):
            return self.a == other and self.b == 0
        if isinstance(other, QuadInt):
            return self.a == other.a and self.b == other.b
        return NotImplemented

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b))

    def __repr__(self):
        return f"QuadInt({self.a}, {self.b})"

    def sign(self):
        return _quad_sign(self.a, self.b)

    def __bool__(self):
        return self.a != 0 or self.b != 0

    def __float__(self):
        return self.a + self.b * _SQRT5


def ksign(x):
    """Exact sign of a kernel scalar (int or QuadInt)."""
    if isinstance(x, int):
        return int_sign(x)
    return x.sign()


def kernel_is_zero(x):
    if isinstance(x, int):
        return x == 0
    return x.a == 0 and x.b == 0


@dataclass(frozen=True)
class ExactScalar:
    """Exact value a + b*sqrt(5) with rational a, b.  Pure rationals have b = 0."""

    a: Fraction
    b: Fraction = Fraction(0)

    @classmethod
    def of(cls, a, b=0):
        return cls(Fraction(a), Fraction(b))

    @classmethod
    def from_kernel(cls, x):
        if isinstance(x, int):
            return cls(Fraction(x))
        return cls(Fraction(x.a), Fraction(x.b))

    def __add__(self, other):
        return ExactScalar(self.a + other.a, self.b + other.b)

    def __sub__(self, other):
        return ExactScalar(self.a - other.a, self.b - other.b)

    def __neg__(self):
        return ExactScalar(-self.a, -self.b)

    def __mul__(self, other):
        return ExactScalar(
            self.a * other.a + 5 * self.b * other.b,
            self.a * other.b + self.b * other.a,
        )

    def sign(self):
        return _quad_sign(self.a, self.b)

    def is_zero(self):
        return self.a == 0 and self.b == 0

    def is_rational(self):
        return self.b == 0

    def __float__(self):
        return float(self.a) + float(self.b) * _SQRT5

    def encode(self, ring=None):
        """Text encoding: "p/q" for rationals, {"a": .., "b": ..} otherwise."""
        if ring == RING_RATIONAL or (ring is None and self.b == 0):
            if self.b != 0:
                raise ValueError("quadratic value cannot encode as rational")
            return _format_fraction(self.a)
        return {"a": _format_fraction(self.a), "b": _format_fraction(self.b)}

    @classmethod
    def decode(cls, obj):
        """Inverse of :meth:`encode`; accepts "p/q" strings, ints, or objects."""
        if isinstance(obj, dict):
            return cls(_parse_fraction(obj["a"]), _parse_fraction(obj.get("b", 0)))
        return cls(_parse_fraction(obj))


def _format_fraction(f):
    f = Fraction(f)
    if f.denominator == 1:
        return str(f.numerator)
    return f"{f.numerator}/{f.denominator}"


def _parse_fraction(obj):
    if isinstance(obj, int):
        return Fraction(obj)
    if isinstance(obj, str):
        try:
            return Fraction(obj)
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"malformed rational {obj!r}") from exc
    raise ValueError(f"malformed rational {obj!r}")


def scalar_sign(x):
    """Sign of an :class:`ExactScalar`, in {-1, 0, +1}."""
    return x.sign()


def triple_to_kernel(triple):
    """Scale an ExactScalar triple to an integral kernel triple.

    Clears all denominators and divides out the integer content, so kernel
    coefficients are coprime integers (or Z[sqrt 5] elements with coprime
    integer content).  Returns (ring, kernel_triple); the overall sign is
    preserved, not normalized.
    """
    quadratic = any(not s.is_rational() for s in triple)
    denoms = []
    for s in triple:
        denoms.append(s.a.denominator)
        denoms.append(s.b.denominator)
    lcm = 1
    for d in denoms:
        lcm = lcm * d // gcd(lcm, d)
    ints = []
    for s in triple:
        ints.append((int(s.a * lcm), int(s.b * lcm)))
    content = 0
    for a, b in ints:
        content = gcd(content, gcd(a, b))
    if content == 0:
        content = 1
    if quadratic:
        kernel = tuple(QuadInt(a // content, b // content) for a, b in ints)
        return RING_QSQRT5, kernel
    kernel = tuple(a // content for a, b in ints)
    return RING_RATIONAL, kernel


def kernel_triple_content(triple):
    """Integer content (gcd over all integer parts) of a kernel triple."""
    content = 0
    for x in triple:
        if isinstance(x, int):
            content = gcd(content, x)
        else:
            content = gcd(content, gcd(x.a, x.b))
    return content


def reduce_kernel_triple(triple):
    """Divide a kernel triple by its integer content (sign untouched)."""
    content = kernel_triple_content(triple)
    if content in (0, 1):
        return triple
    out = []
    for x in triple:
        if isinstance(x, int):
            out.append(x // content)
        else:
            out.append(QuadInt(x.a // content, x.b // content))
    return tuple(out)
