"""Line-set generators: seeded random arrangements and the 10-line tight
example built from the face axes of the regular icosahedron."""

from __future__ import annotations

import random
from functools import lru_cache

from .arrangement import build_sphere, quotient_projective
from .errors import ExampleVerificationError, GenerationError
from .geometry import GreatCircleLine, LineSet, check_general_position
from .scalars import ExactScalar
from .zones import vertex_zone, vertex_zone_complexity, min_vertex_complexity

DEFAULT_MAX_REJECTIONS = 20000


def random_arrangement(n, coeff_bound=50, seed=0, max_rejections=DEFAULT_MAX_REJECTIONS):
    """n integer-coefficient lines in general position, deterministic per seed.

    Coefficients are drawn uniformly from [-coeff_bound, coeff_bound]^3 with
    the zero triple excluded; candidates breaking general position are
    rejected and redrawn.
    """
    if n < 3:
        raise ValueError("need n >= 3")
    if coeff_bound < 1:
        raise ValueError("coeff_bound must be >= 1")
    rng = random.Random(seed)
    lines = []
    rejections = 0
    while len(lines) < n:
        triple = tuple(rng.randint(-coeff_bound, coeff_bound) for _ in range(3))
        if triple == (0, 0, 0):
            continue
        candidate = GreatCircleLine.of(*triple)
        trial = LineSet.of(lines + [candidate])
        if check_general_position(trial).ok:
            lines.append(candidate)
        else:
            rejections += 1
            if rejections > max_rejections:
                raise GenerationError(
                    f"gave up after {rejections} rejections at "
                    f"{len(lines)}/{n} lines (bound {coeff_bound} too small?)"
                )
    return LineSet.of(lines)


# Dodecahedron vertices (dual to icosahedron face centers) up to scale:
# (+-1, +-1, +-1) and cyclic permutations of (0, 2, 3 + sqrt 5), since
# 2*phi * (0, 1/phi, phi) = (0, 2, 2 phi^2) and 2 phi^2 = 3 + sqrt 5.
def _icosahedral_lines():
    phi2 = ExactScalar.of(3, 1)      # 3 + sqrt(5) = 2 * phi^2
    two = ExactScalar.of(2)
    zero = ExactScalar.of(0)
    cubics = [(1, 1, 1), (1, 1, -1), (1, -1, 1), (1, -1, -1)]
    lines = [GreatCircleLine.of(*t) for t in cubics]
    for s in (1, -1):
        signed = ExactScalar.of(3 * s, s)
        for triple in ((zero, two, signed), (two, signed, zero),
                       (signed, zero, two)):
            lines.append(GreatCircleLine.of(*triple))
    return LineSet.of(lines)


ICOSAHEDRAL_CENSUS = {
    "vertices": 45,
    "f_vector": {3: 30, 5: 6, 6: 10},
    "vertex_types": {(3, 3, 5, 6): 30, (3, 3, 6, 6): 15},
    "C_by_type": {(3, 3, 5, 6): 5, (3, 3, 6, 6): 6},
    "C_L": 5,
}


@lru_cache(maxsize=1)
def icosahedral_example():
    """The 10-line tight example over Q(sqrt 5), verified against its census:
    45 vertices, f-vector {3: 30, 5: 6, 6: 10}, 30 vertices of type
    {3,3,5,6} with C(v) = 5 and 15 of type {3,3,6,6} with C(v) = 6."""
    line_set = _icosahedral_lines()
    observed = _census(line_set)
    if observed != ICOSAHEDRAL_CENSUS:
        raise ExampleVerificationError(
            f"icosahedral construction failed verification: {observed}",
            observed=observed,
        )
    return line_set


def _census(line_set):
    if not check_general_position(line_set).ok:
        return {"general_position": False}
    proj = quotient_projective(build_sphere(line_set))
    types = {}
    c_by_type = {}
    for pv in range(proj.V):
        kv = vertex_zone(proj, pv)
        types[kv] = types.get(kv, 0) + 1
        cv = vertex_zone_complexity(proj, pv)
        c_by_type.setdefault(kv, cv)
        if c_by_type[kv] != cv:
            c_by_type[kv] = None
    return {
        "vertices": proj.V,
        "f_vector": dict(sorted(proj.face_sizes().items())),
        "vertex_types": types,
        "C_by_type": c_by_type,
        "C_L": min_vertex_complexity(proj),
    }
