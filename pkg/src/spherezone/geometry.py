"""Great circles, homogeneous points, and the exact predicates on them.

All geometry is decided by exact signs of integer (or Z[sqrt 5]) expressions:
cross products, dot products, and 3x3 determinants of coefficient triples.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import IdenticalLinesError
from .scalars import (
    RING_QSQRT5,
    RING_RATIONAL,
    ExactScalar,
    QuadInt,
    kernel_is_zero,
    ksign,
    reduce_kernel_triple,
    triple_to_kernel,
)


def cross(u, v):
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


def dot(u, v):
    return u[0] * v[0] + u[1] * v[1] + u[2] * v[2]


def det3(u, v, w):
    return dot(u, cross(v, w))


def neg3(u):
    return (-u[0], -u[1], -u[2])


def add3(u, v):
    return (u[0] + v[0], u[1] + v[1], u[2] + v[2])


def is_zero_triple(u):
    return all(kernel_is_zero(x) for x in u)


def _canonicalize(triple):
    """Reduce content and make the first nonzero entry positive."""
    triple = reduce_kernel_triple(triple)
    for x in triple:
        s = ksign(x)
        if s < 0:
            return neg3(triple)
        if s > 0:
            return triple
    raise ValueError("zero triple has no canonical form")


def _coerce_triple(values):
    """Accept ints/Fractions/ExactScalars and return (ring, kernel triple)."""
    exact = []
    for v in values:
        if isinstance(v, ExactScalar):
            exact.append(v)
        elif isinstance(v, QuadInt):
            exact.append(ExactScalar.from_kernel(v))
        else:
            exact.append(ExactScalar.of(v))
    return triple_to_kernel(tuple(exact))


@dataclass(frozen=True)
class GreatCircleLine:
    """The great circle {p : c . p = 0}, equivalently a projective line.

    ``coeffs`` is the canonical kernel triple: integral, content-free, first
    nonzero coefficient positive.
    """

    ring: str
    coeffs: tuple

    @classmethod
    def of(cls, c0, c1, c2):
        ring, kernel = _coerce_triple((c0, c1, c2))
        if is_zero_triple(kernel):
            raise ValueError("line coefficients must not all be zero")
        return cls(ring, _canonicalize(kernel))

    def exact_coeffs(self):
        return tuple(ExactScalar.from_kernel(x) for x in self.coeffs)

    def same_line(self, other):
        return is_zero_triple(cross(self.coeffs, other.coeffs))


@dataclass(frozen=True)
class HomogeneousPoint:
    """A sphere point up to positive scaling; the antipodal pair is the
    projective point."""

    ring: str
    coords: tuple

    @classmethod
    def of(cls, x0, x1, x2):
        ring, kernel = _coerce_triple((x0, x1, x2))
        if is_zero_triple(kernel):
            raise ValueError("point coordinates must not all be zero")
        return cls(ring, reduce_kernel_triple(kernel))

    @classmethod
    def from_kernel(cls, ring, triple):
        return cls(ring, reduce_kernel_triple(triple))

    def antipode(self):
        return HomogeneousPoint(self.ring, neg3(self.coords))

    def projective_canonical(self):
        """Representative with the first nonzero coordinate positive."""
        return HomogeneousPoint(self.ring, _canonicalize(self.coords))

    def exact_coords(self):
        return tuple(ExactScalar.from_kernel(x) for x in self.coords)


def combined_ring(lines):
    for line in lines:
        if line.ring == RING_QSQRT5:
            return RING_QSQRT5
    return RING_RATIONAL


def _as_ring(triple, ring):
    if ring == RING_RATIONAL:
        return triple
    return tuple(x if isinstance(x, QuadInt) else QuadInt(x) for x in triple)


@dataclass(frozen=True)
class LineSet:
    """An ordered set of pairwise distinct projective lines."""

    lines: tuple
    ring: str = field(default=RING_RATIONAL)

    @classmethod
    def of(cls, lines):
        lines = tuple(lines)
        return cls(lines, combined_ring(lines))

    @property
    def n(self):
        return len(self.lines)

    def kernel_coeffs(self):
        """Coefficient triples coerced to one kernel type for mixed rings."""
        return [_as_ring(line.coeffs, self.ring) for line in self.lines]


def intersect(l1, l2):
    """Crossing point of two lines: the cross product of coefficient triples."""
    r = cross(l1.coeffs, l2.coeffs)
    if is_zero_triple(r):
        raise IdenticalLinesError("lines are projectively identical")
    ring = combined_ring((l1, l2))
    return HomogeneousPoint.from_kernel(ring, _as_ring(r, ring))


def orient(p, l):
    """Exact side-of-circle predicate: sign(c . p); 0 iff p lies on l."""
    return ksign(dot(p.coords, l.coeffs))


@dataclass(frozen=True)
class GeneralPositionReport:
    ok: bool
    duplicate_pairs: tuple = ()
    concurrent_triples: tuple = ()

    def describe(self):
        if self.ok:
            return "ok"
        parts = []
        for i, j in self.duplicate_pairs:
            parts.append(f"duplicate line: indices {i}, {j}")
        for i, j, k in self.concurrent_triples:
            parts.append(f"concurrent triple: indices {i}, {j}, {k}")
        return "; ".join(parts)


def check_general_position(line_set):
    """All lines pairwise distinct and no three concurrent.

    Concurrency of three distinct lines is equivalent to the vanishing of the
    3x3 determinant of their coefficient triples.
    """
    coeffs = line_set.kernel_coeffs()
    n = len(coeffs)
    duplicates = []
    for i in range(n):
        for j in range(i + 1, n):
            if is_zero_triple(cross(coeffs[i], coeffs[j])):
                duplicates.append((i, j))
    concurrent = []
    if not duplicates:
        for i in range(n):
            for j in range(i + 1, n):
                rij = cross(coeffs[i], coeffs[j])
                for k in range(j + 1, n):
                    if ksign(dot(rij, coeffs[k])) == 0:
                        concurrent.append((i, j, k))
    ok = not duplicates and not concurrent
    return GeneralPositionReport(ok, tuple(duplicates), tuple(concurrent))
