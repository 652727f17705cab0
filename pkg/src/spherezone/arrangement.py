"""Half-edge arrangement of great circles on the sphere and its antipodal
quotient in the projective plane.

Construction is purely combinatorial over exact signs: intersection points
come from cross products, each circle's points are sorted cyclically by a
sign-only angular comparison, and half-edge next-pointers are stitched by
rotating the four outgoing directions around every vertex.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import cmp_to_key

from .errors import (
    DegenerateInputError,
    InternalConsistencyError,
    OnBoundaryError,
)
from .geometry import (
    add3,
    check_general_position,
    cross,
    det3,
    dot,
    neg3,
)
from .scalars import ksign, reduce_kernel_triple


@dataclass
class VertexRecord:
    id: int
    point: tuple            # sphere representative (kernel triple)
    line_pair: tuple        # indices of the two lines through the vertex
    antipode: int = -1
    halfedge: int = -1      # one outgoing halfedge


@dataclass
class HalfEdge:
    id: int
    origin: int
    line: int
    forward: bool           # True: travels counterclockwise around +normal
    twin: int = -1
    next: int = -1
    face: int = -1


@dataclass
class FaceRecord:
    id: int
    size: int
    halfedge: int
    sign_vector: tuple      # one nonzero sign per line
    antipode: int = -1


# Cyclic position classes around an axis, relative to a reference direction:
# indices 0..7 cover angle 0, (0,pi/2), pi/2, (pi/2,pi), pi, (pi,3pi/2),
# 3pi/2, (3pi/2,2pi).  Classes at exact multiples of pi/2 are singletons.
_CLASS_INDEX = {
    (0, 1): 0,
    (1, 1): 1,
    (1, 0): 2,
    (1, -1): 3,
    (0, -1): 4,
    (-1, -1): 5,
    (-1, 0): 6,
    (-1, 1): 7,
}


def _angular_class(axis, ref, d):
    return _CLASS_INDEX[(ksign(det3(axis, ref, d)), ksign(dot(ref, d)))]


def _cyclic_cmp(axis, ref):
    """Comparator ordering directions counterclockwise around ``axis``
    starting at ``ref``.  All arguments must be orthogonal to ``axis``."""

    def compare(da, db):
        ca = _angular_class(axis, ref, da)
        cb = _angular_class(axis, ref, db)
        if ca != cb:
            return -1 if ca < cb else 1
        s = ksign(det3(axis, da, db))
        if s == 0:
            return 0
        return -1 if s > 0 else 1

    return compare


class SphereArrangement:
    """Immutable half-edge complex of n great circles in general position."""

    def __init__(self, line_set, vertices, halfedges, faces, circle_cycles):
        self.lines = line_set
        self.n = line_set.n
        self.vertices = vertices
        self.halfedges = halfedges
        self.faces = faces
        self.circle_cycles = circle_cycles      # per line: cyclic vertex ids
        self.faces_by_sign = {f.sign_vector: f.id for f in faces}
        self.kernel_coeffs = line_set.kernel_coeffs()

    @property
    def vertex_count(self):
        return len(self.vertices)

    @property
    def edge_count(self):
        return len(self.halfedges) // 2

    @property
    def face_count(self):
        return len(self.faces)

    def face_sizes(self):
        return Counter(f.size for f in self.faces)

    def outgoing_halfedges(self, vid):
        out = []
        h0 = self.vertices[vid].halfedge
        h = h0
        # outgoing ring is recoverable via twin/next; but we stored it densely
        # during construction, so fall back to a scan only if needed.
        seen = set()
        while h not in seen:
            seen.add(h)
            out.append(h)
            h = self.halfedges[self.halfedges[h].twin].next
            if len(out) > 8:
                raise InternalConsistencyError("vertex ring does not close")
        return out

    def neighbors(self, vid):
        return [
            self.halfedges[self.halfedges[h].twin].origin
            for h in self.outgoing_halfedges(vid)
        ]

    def incident_faces(self, vid):
        return [self.halfedges[h].face for h in self.outgoing_halfedges(vid)]

    def face_vertex_cycle(self, fid):
        out = []
        h0 = self.faces[fid].halfedge
        h = h0
        while True:
            out.append(self.halfedges[h].origin)
            h = self.halfedges[h].next
            if h == h0:
                break
        return out

    def sign_vector_at(self, point):
        sv = []
        for c in self.kernel_coeffs:
            s = ksign(dot(point, c))
            if s == 0:
                raise OnBoundaryError("point lies on a line of the arrangement")
            sv.append(s)
        return tuple(sv)

    def locate_face(self, point):
        """Face id whose sign vector matches the (off-boundary) query point."""
        coords = point.coords if hasattr(point, "coords") else point
        sv = self.sign_vector_at(coords)
        try:
            return self.faces_by_sign[sv]
        except KeyError as exc:
            raise InternalConsistencyError(
                "no face carries the query sign vector"
            ) from exc

    def face_witness(self, fid):
        """An exactly interior sphere point of face ``fid``.

        Sum of the boundary-vertex representatives; every face constraint is
        strict in at least one summand except for the two-line digon, which is
        handled by combining the two arc midpoints instead.
        """
        cycle = self.face_vertex_cycle(fid)
        if self.n >= 3:
            w = self.vertices[cycle[0]].point
            for vid in cycle[1:]:
                w = add3(w, self.vertices[vid].point)
            return reduce_kernel_triple(w)
        # digon of a 2-line arrangement
        c1, c2 = self.kernel_coeffs
        sv = self.faces[fid].sign_vector
        g12 = dot(c1, c2)
        m1 = tuple(sv[1] * (c2[i] * dot(c1, c1) - c1[i] * g12) for i in range(3))
        m2 = tuple(sv[0] * (c1[i] * dot(c2, c2) - c2[i] * g12) for i in range(3))
        return reduce_kernel_triple(add3(m1, m2))


def build_sphere(line_set):
    """Build the full half-edge complex of a line set on the sphere."""
    n = line_set.n
    if n < 2:
        raise DegenerateInputError("need at least two lines")
    report = check_general_position(line_set)
    if not report.ok:
        raise DegenerateInputError(report.describe(), report=report)

    coeffs = line_set.kernel_coeffs()
    vertices = []
    on_circle = [[] for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            r = reduce_kernel_triple(cross(coeffs[i], coeffs[j]))
            vp = VertexRecord(len(vertices), r, (i, j))
            vertices.append(vp)
            vm = VertexRecord(len(vertices), neg3(r), (i, j))
            vertices.append(vm)
            vp.antipode = vm.id
            vm.antipode = vp.id
            on_circle[i] += [vp.id, vm.id]
            on_circle[j] += [vp.id, vm.id]

    # cyclic order of the vertices around each circle
    circle_cycles = []
    for i in range(n):
        vids = on_circle[i]
        ref = vertices[vids[0]].point
        cmp = _cyclic_cmp(coeffs[i], ref)
        vids = sorted(vids, key=cmp_to_key(lambda a, b, c=cmp: c(
            vertices[a].point, vertices[b].point)))
        circle_cycles.append(vids)

    # one forward/backward halfedge pair per consecutive arc
    halfedges = []
    outgoing = [[] for v in vertices]    # (halfedge id, direction triple)
    for i in range(n):
        cyc = circle_cycles[i]
        m = len(cyc)
        for idx in range(m):
            a, b = cyc[idx], cyc[(idx + 1) % m]
            hf = HalfEdge(len(halfedges), a, i, True)
            halfedges.append(hf)
            hb = HalfEdge(len(halfedges), b, i, False)
            halfedges.append(hb)
            hf.twin, hb.twin = hb.id, hf.id
            ta = cross(coeffs[i], vertices[a].point)
            tb = cross(coeffs[i], vertices[b].point)
            outgoing[a].append((hf.id, ta))
            outgoing[b].append((hb.id, neg3(tb)))

    # stitch next-pointers: next(h) is the clockwise neighbor of twin(h)
    # in the counterclockwise outgoing ring at head(h)
    for vid, ring in enumerate(outgoing):
        p = vertices[vid].point
        ref = ring[0][1]
        cmp = _cyclic_cmp(p, ref)
        ring.sort(key=cmp_to_key(lambda a, b, c=cmp: c(a[1], b[1])))
        vertices[vid].halfedge = ring[0][0]
        pos = {hid: k for k, (hid, _) in enumerate(ring)}
        outgoing[vid] = (ring, pos)
    for h in halfedges:
        tw = halfedges[h.twin]
        ring, pos = outgoing[tw.origin]
        h.next = ring[pos[tw.id] - 1][0]

    # faces from next-cycles, with sign vectors
    faces = []
    for h in halfedges:
        if h.face != -1:
            continue
        fid = len(faces)
        cycle = []
        cur = h
        while cur.face == -1:
            cur.face = fid
            cycle.append(cur)
            cur = halfedges[cur.next]
        if cur is not h:
            raise InternalConsistencyError("face cycle did not close")
        sv = [0] * n
        for e in cycle:
            sv[e.line] = 1 if e.forward else -1
        boundary_vids = [e.origin for e in cycle]
        for j in range(n):
            if sv[j]:
                continue
            for vid in boundary_vids:
                s = ksign(dot(vertices[vid].point, coeffs[j]))
                if s != 0:
                    sv[j] = s
                    break
            if sv[j] == 0:
                raise InternalConsistencyError(
                    "face sign vector has an undecided entry"
                )
        faces.append(FaceRecord(fid, len(cycle), h.id, tuple(sv)))

    by_sign = {f.sign_vector: f.id for f in faces}
    for f in faces:
        f.antipode = by_sign[neg3_tuple(f.sign_vector)]
        if f.antipode == f.id:
            raise InternalConsistencyError("face is its own antipode")

    arr = SphereArrangement(line_set, vertices, halfedges, faces, circle_cycles)
    _validate_counts(arr)
    return arr


def _validate_counts(arr):
    n = arr.n
    v, e, f = arr.vertex_count, arr.edge_count, arr.face_count
    if v != n * (n - 1) or e != 2 * n * (n - 1) or f != n * (n - 1) + 2:
        raise InternalConsistencyError(
            f"sphere counts V={v} E={e} F={f} violate the n={n} formulas"
        )
    if v - e + f != 2:
        raise InternalConsistencyError("Euler characteristic is not 2")
    for face in arr.faces:
        if face.size != arr.faces[face.antipode].size:
            raise InternalConsistencyError("antipodal faces differ in size")


class ProjectiveArrangement:
    """Antipodal quotient of a sphere arrangement."""

    def __init__(self, sphere):
        self.sphere = sphere
        self.n = sphere.n
        self.vertex_reps = []
        self.vertex_orbit = {}
        for v in sphere.vertices:
            if v.antipode == v.id:
                raise InternalConsistencyError("vertex is its own antipode")
            if v.id < v.antipode:
                idx = len(self.vertex_reps)
                self.vertex_reps.append(v.id)
                self.vertex_orbit[v.id] = idx
                self.vertex_orbit[v.antipode] = idx
        self.face_reps = []
        self.face_orbit = {}
        self.faces_by_sign = {}
        for f in sphere.faces:
            if f.id < f.antipode:
                idx = len(self.face_reps)
                self.face_reps.append(f.id)
                self.face_orbit[f.id] = idx
                self.face_orbit[f.antipode] = idx
                self.faces_by_sign[_canonical_sv(f.sign_vector)] = idx
        self.V = len(self.vertex_reps)
        self.E = sphere.edge_count // 2
        self.F = len(self.face_reps)
        if self.V - self.E + self.F != 1:
            raise InternalConsistencyError("projective Euler count is not 1")

    def face_size(self, pf):
        return self.sphere.faces[self.face_reps[pf]].size

    def face_sizes(self):
        return Counter(self.face_size(pf) for pf in range(self.F))

    def vertex_point(self, pv):
        return self.sphere.vertices[self.vertex_reps[pv]].point

    def vertex_line_pair(self, pv):
        return self.sphere.vertices[self.vertex_reps[pv]].line_pair

    def vertex_zone_faces(self, pv):
        """The four projective faces containing the vertex."""
        vid = self.vertex_reps[pv]
        return [self.face_orbit[f] for f in self.sphere.incident_faces(vid)]

    def vertices_on_line(self, line_idx):
        seen, out = set(), []
        for vid in self.sphere.circle_cycles[line_idx]:
            pv = self.vertex_orbit[vid]
            if pv not in seen:
                seen.add(pv)
                out.append(pv)
        return out

    def locate_face(self, point):
        """Projective face containing an off-boundary point, by sign vector."""
        coords = point.coords if hasattr(point, "coords") else point
        sv = self.sphere.sign_vector_at(coords)
        try:
            return self.faces_by_sign[_canonical_sv(sv)]
        except KeyError as exc:
            raise InternalConsistencyError(
                "no face carries the query sign vector"
            ) from exc


def _canonical_sv(sv):
    return sv if sv[0] > 0 else neg3_tuple(sv)


def neg3_tuple(sv):
    return tuple(-s for s in sv)


def quotient_projective(sphere):
    return ProjectiveArrangement(sphere)


def face_sizes(arrangement):
    """Histogram {size: count} for either arrangement flavor."""
    return arrangement.face_sizes()


def locate_face(arrangement, point):
    return arrangement.locate_face(point)
