"""Zone complexities of lines and vertices, C(L), and the identity checker.

The size of the face containing a witness point in a reduced arrangement is
computed directly from the halfspace description of that face: the face is the
spherical cell cut out by one hemisphere per remaining circle, its corners are
the feasible intersection directions of circle pairs, and its size equals the
corner count.  A numpy int64 path handles small-coefficient rational inputs;
anything larger (or quadratic) falls back to exact big-integer arithmetic.
The full rebuild-and-locate route stays available through arrangement-level
operations and backs the cross-checks in the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import InternalConsistencyError, OnBoundaryError
from .geometry import add3, cross, dot
from .scalars import ksign

# int64 safety: |dot(c, r)| <= 3 * max|c| * max|r| and |r| <= 2 * max|c|^2
# for candidate rays; keep a wide margin below 2^62.
_INT64_COEFF_LIMIT = 1 << 19
_INT64_POINT_LIMIT = 1 << 40


def _numpy_safe(coeffs, point):
    mc = 0
    for c in coeffs:
        for x in c:
            if not isinstance(x, int):
                return False
            mc = max(mc, abs(x))
    mp = 0
    for x in point:
        if not isinstance(x, int):
            return False
        mp = max(mp, abs(x))
    return mc < _INT64_COEFF_LIMIT and mp < _INT64_POINT_LIMIT


def cell_size_at(coeffs, point):
    """Boundary size of the arrangement cell of ``coeffs`` containing ``point``.

    ``coeffs`` are kernel coefficient triples of circles in general position;
    ``point`` must lie strictly inside a cell.  Works on the sphere; the
    projective face through the antipodal pair has the same size.
    """
    m = len(coeffs)
    if m < 2:
        raise ValueError("cell size needs at least two circles")
    if m == 2:
        if ksign(dot(point, coeffs[0])) == 0 or ksign(dot(point, coeffs[1])) == 0:
            raise OnBoundaryError("witness lies on a circle")
        return 2
    if _numpy_safe(coeffs, point):
        return _cell_size_numpy(coeffs, point)
    return _cell_size_python(coeffs, point)


def _cell_size_numpy(coeffs, point):
    c = np.asarray(coeffs, dtype=np.int64)
    p = np.asarray(point, dtype=np.int64)
    sigma = np.sign(c @ p)
    if np.any(sigma == 0):
        raise OnBoundaryError("witness lies on a circle")
    m = len(coeffs)
    ii, jj = np.triu_indices(m, k=1)
    rays = np.cross(c[ii], c[jj])
    t = np.sign(c @ rays.T) * sigma[:, None]
    col = t.sum(axis=0)
    return int(np.count_nonzero(np.abs(col) == m - 2))


def _cell_size_python(coeffs, point):
    sigma = [ksign(dot(point, c)) for c in coeffs]
    if any(s == 0 for s in sigma):
        raise OnBoundaryError("witness lies on a circle")
    m = len(coeffs)
    count = 0
    for i in range(m):
        for j in range(i + 1, m):
            r = cross(coeffs[i], coeffs[j])
            total = 0
            for k in range(m):
                if k == i or k == j:
                    continue
                s = ksign(dot(r, coeffs[k])) * sigma[k]
                total += s
            if abs(total) == m - 2:
                count += 1
    return count


def _reduced_coeffs(proj, removed):
    return [c for idx, c in enumerate(proj.sphere.kernel_coeffs)
            if idx not in removed]


def vertex_zone(proj, pv):
    """K_v: the 4-multiset of sizes of the faces containing the vertex."""
    return tuple(sorted(proj.face_size(pf) for pf in proj.vertex_zone_faces(pv)))


def vertex_zone_complexity(proj, pv):
    """C(v): size of the face holding v once its two lines are removed."""
    if proj.n < 4:
        raise ValueError("vertex zone complexity needs n >= 4")
    removed = set(proj.vertex_line_pair(pv))
    return cell_size_at(_reduced_coeffs(proj, removed), proj.vertex_point(pv))


def _segment_witnesses(proj, line_idx):
    """One interior sphere point per arc of the circle between consecutive
    vertices; antipodal arcs produce sign-vector duplicates and collapse in
    the projective dedup."""
    sphere = proj.sphere
    cyc = sphere.circle_cycles[line_idx]
    m = len(cyc)
    for idx in range(m):
        a = sphere.vertices[cyc[idx]].point
        b = sphere.vertices[cyc[(idx + 1) % m]].point
        yield add3(a, b)


def line_zone(proj, line_idx):
    """Zone of a line: distinct faces of the reduced arrangement supported by
    the line, as {canonical sign vector: size}."""
    if proj.n < 3:
        raise ValueError("line zone needs n >= 3")
    reduced = _reduced_coeffs(proj, {line_idx})
    cells = {}
    for w in _segment_witnesses(proj, line_idx):
        sv = []
        for c in reduced:
            s = ksign(dot(w, c))
            if s == 0:
                raise InternalConsistencyError("segment witness on a circle")
            sv.append(s)
        if sv[0] < 0:
            sv = [-s for s in sv]
        key = tuple(sv)
        if key not in cells:
            cells[key] = cell_size_at(reduced, w)
    return cells


def line_zone_complexity(proj, line_idx):
    """C(l): sum of the sizes of the distinct faces in the zone of the line."""
    return sum(line_zone(proj, line_idx).values())


def zone_face_size_sum(proj, line_idx):
    """Sum of |f| over the faces of A(L) that have an edge on the line."""
    sphere = proj.sphere
    seen = set()
    total = 0
    for h in sphere.halfedges:
        if h.line != line_idx:
            continue
        pf = proj.face_orbit[h.face]
        if pf not in seen:
            seen.add(pf)
            total += proj.face_size(pf)
    return total


def min_vertex_complexity(proj):
    """C(L) = min over vertices of C(v)."""
    if proj.n < 4:
        raise ValueError("C(L) needs n >= 4")
    return min(vertex_zone_complexity(proj, pv) for pv in range(proj.V))


def min_on_line(proj, line_idx):
    """r(l) = min over vertices on the line of C(v)."""
    return min(vertex_zone_complexity(proj, pv)
               for pv in proj.vertices_on_line(line_idx))


@dataclass
class VertexZoneInfo:
    vertex: int
    line_pair: tuple
    K_v: tuple
    C_v: int
    zone_size_sum: int


@dataclass
class LineZoneInfo:
    line: int
    C_l: int
    r_l: int
    zone_size_sum: int               # sum |f| over faces of A(L) on l
    vertex_zone_sum: int             # sum over v on l of sum |f|, f in Z(v)
    vertex_complexity_sum: int


@dataclass
class IdentityLedger:
    eq1: dict = field(default_factory=dict)
    eq1_1: dict = field(default_factory=dict)
    eq2: dict = field(default_factory=dict)
    eq3: dict = field(default_factory=dict)
    eq4: dict = field(default_factory=dict)

    def all_ok(self):
        return all(
            all(v for v in d.values())
            for d in (self.eq1, self.eq1_1, self.eq2, self.eq3, self.eq4)
        )


@dataclass
class ZoneReport:
    n: int
    per_vertex: list
    per_line: list
    C_L: int
    identities: IdentityLedger
    zone_theorem_ok: bool            # C(l) <= 5.5(n-1) - 1 on every line
    r_bound_ok: bool                 # r(l) <= 7 on every line

    @property
    def identities_ok(self):
        return self.identities.all_ok()


def verify_identities(proj):
    """Full zone report with all five exact identity checks."""
    n = proj.n
    if n < 4:
        raise ValueError("identity suite needs n >= 4")

    per_vertex = []
    for pv in range(proj.V):
        kv = vertex_zone(proj, pv)
        cv = vertex_zone_complexity(proj, pv)
        per_vertex.append(VertexZoneInfo(
            pv, proj.vertex_line_pair(pv), kv, cv, sum(kv)))

    ledger = IdentityLedger()
    for info in per_vertex:
        ledger.eq1_1[info.vertex] = info.zone_size_sum == info.C_v + 12

    per_line = []
    for li in range(n):
        on_l = proj.vertices_on_line(li)
        vz_sum = sum(per_vertex[pv].zone_size_sum for pv in on_l)
        cv_sum = sum(per_vertex[pv].C_v for pv in on_l)
        r_l = min(per_vertex[pv].C_v for pv in on_l)
        c_l = line_zone_complexity(proj, li)
        full_sum = zone_face_size_sum(proj, li)
        info = LineZoneInfo(li, c_l, r_l, full_sum, vz_sum, cv_sum)
        per_line.append(info)

        ledger.eq1[li] = vz_sum == 2 * full_sum
        ledger.eq2[li] = vz_sum == cv_sum + 12 * (n - 1)
        ledger.eq3[li] = full_sum == c_l + 4 * (n - 1)
        ledger.eq4[li] = 2 * c_l == cv_sum + 4 * (n - 1)

    c_L = min(info.C_v for info in per_vertex)
    zone_ok = all(2 * info.C_l <= 11 * (n - 1) - 2 for info in per_line)
    r_ok = all(info.r_l <= 7 for info in per_line)
    return ZoneReport(n, per_vertex, per_line, c_L, ledger, zone_ok, r_ok)


def zone_report(proj):
    return verify_identities(proj)
