"""Exact rational discharging on a sphere arrangement.

Stage w1 charges size-k faces with k-3 and every vertex with -1 (total -6 by
Euler accounting).  Stage w2 spreads each face's charge evenly over its
vertices.  Stage w3 lets every vertex with nonnegative charge split it evenly
among its nearby negative vertices (edge neighbors or opposites in a size-4
face).  Totals are conserved exactly at every stage.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import InternalConsistencyError

STAGE_W1 = "w1"
STAGE_W2 = "w2"
STAGE_W3 = "w3"


@dataclass
class ChargeState:
    stage: str
    face_charge: dict
    vertex_charge: dict

    @property
    def total(self):
        return sum(self.face_charge.values(), Fraction(0)) + \
            sum(self.vertex_charge.values(), Fraction(0))


def initial_charges(sphere):
    """Stage w1: face of size k carries k-3, every vertex carries -1."""
    face_charge = {f.id: Fraction(f.size - 3) for f in sphere.faces}
    vertex_charge = {v.id: Fraction(-1) for v in sphere.vertices}
    state = ChargeState(STAGE_W1, face_charge, vertex_charge)
    if state.total != -6:
        raise InternalConsistencyError(
            f"initial charge total {state.total} != -6"
        )
    return state


def discharge_faces(state, sphere):
    """Stage w2: each size-k face sends (k-3)/k to each of its k vertices."""
    if state.stage != STAGE_W1:
        raise ValueError("discharge_faces needs a stage-w1 state")
    vertex_charge = dict(state.vertex_charge)
    for f in sphere.faces:
        share = Fraction(f.size - 3, f.size)
        for vid in sphere.face_vertex_cycle(f.id):
            vertex_charge[vid] += share
    out = ChargeState(STAGE_W2, {f.id: Fraction(0) for f in sphere.faces},
                      vertex_charge)
    if out.total != -6:
        raise InternalConsistencyError("stage w2 lost charge")
    return out


def vertex_multiset(sphere, vid):
    """K_v as a sorted 4-tuple of incident face sizes."""
    return tuple(sorted(sphere.faces[f].size for f in sphere.incident_faces(vid)))


def deficiency(K):
    """Sum of (k-3)/k over a 4-multiset; w2(v) = deficiency(K_v) - 1."""
    return sum((Fraction(k - 3, k) for k in K), Fraction(0))


def enumerate_lemma_multisets(cap=12):
    """All 4-multisets {k1<=..<=k4} with 3 <= ki <= cap, at most two entries
    equal to 3, sum >= 18, and deficiency < 1.

    Any qualifying multiset forces k1 = k2 = 3, and 1/k3 + 1/k4 > 1/3 then
    caps k4 at 11, so every cap >= 12 yields the same list.
    """
    if cap < 12:
        raise ValueError("cap must be at least 12")
    out = []
    for k1 in range(3, cap + 1):
        for k2 in range(k1, cap + 1):
            for k3 in range(k2, cap + 1):
                for k4 in range(k3, cap + 1):
                    K = (k1, k2, k3, k4)
                    if sum(1 for k in K if k == 3) > 2:
                        continue
                    if sum(K) < 18:
                        continue
                    if deficiency(K) < 1:
                        out.append(K)
    for K in out:
        if not (K[0] == K[1] == 3 and K[3] <= 11):
            raise InternalConsistencyError(
                f"cap argument violated by qualifying multiset {K}"
            )
    return out


@dataclass
class MultisetClass:
    K: tuple
    deficiency: Fraction
    qualifies: bool

    @classmethod
    def of(cls, K, lemma_list=None):
        K = tuple(sorted(K))
        d = deficiency(K)
        if lemma_list is None:
            lemma_list = enumerate_lemma_multisets()
        return cls(K, d, K in lemma_list)


@dataclass
class VertexClass:
    vertex: int
    K_v: tuple
    w2: Fraction
    negative: bool
    hypothesis_18: bool          # sum of K_v >= 18, i.e. C(v) >= 6
    in_lemma_list: bool
    theorem_witness: bool        # sum of K_v <= 17, i.e. C(v) <= 5


def classify_negative(state, sphere):
    """Per-vertex classification of the stage-w2 charges.

    Where the size sum of the vertex zone is at least 18 the sign of w2 must
    match membership in the five-multiset list; a mismatch is an engine bug.
    Vertices below 18 are exempt and flagged as low-complexity witnesses.
    """
    if state.stage != STAGE_W2:
        raise ValueError("classify_negative needs a stage-w2 state")
    lemma = set(enumerate_lemma_multisets())
    out = []
    for v in sphere.vertices:
        kv = vertex_multiset(sphere, v.id)
        w2 = state.vertex_charge[v.id]
        hyp = sum(kv) >= 18
        in_list = kv in lemma
        if hyp and ((w2 < 0) != in_list):
            raise InternalConsistencyError(
                f"w2 sign disagrees with the multiset list at vertex {v.id}: "
                f"K_v={kv}, w2={w2}"
            )
        out.append(VertexClass(v.id, kv, w2, w2 < 0, hyp, in_list,
                               sum(kv) <= 17))
    if not any(c.theorem_witness for c in out):
        raise InternalConsistencyError(
            "no vertex with zone size sum <= 17; C(L) <= 5 would be violated"
        )
    return out


def v_minus(state, sphere, uid):
    """V-_u: negative-charge vertices adjacent to u or opposite u in a quad."""
    if state.stage != STAGE_W2:
        raise ValueError("v_minus needs a stage-w2 state")
    if state.vertex_charge[uid] < 0:
        raise ValueError("v_minus is defined only for w2(u) >= 0")
    candidates = set(sphere.neighbors(uid))
    for fid in sphere.incident_faces(uid):
        face = sphere.faces[fid]
        if face.size != 4:
            continue
        cycle = sphere.face_vertex_cycle(fid)
        idx = cycle.index(uid)
        candidates.add(cycle[(idx + 2) % 4])
    return frozenset(v for v in candidates if state.vertex_charge[v] < 0)


def discharge_vertices(state, sphere):
    """Stage w3: nonnegative vertices split their charge over V-_u."""
    if state.stage != STAGE_W2:
        raise ValueError("discharge_vertices needs a stage-w2 state")
    vertex_charge = dict(state.vertex_charge)
    for v in sphere.vertices:
        w2 = state.vertex_charge[v.id]
        if w2 < 0:
            continue
        receivers = v_minus(state, sphere, v.id)
        if not receivers:
            continue
        share = w2 / len(receivers)
        vertex_charge[v.id] -= w2
        for r in receivers:
            vertex_charge[r] += share
    out = ChargeState(STAGE_W3, dict(state.face_charge), vertex_charge)
    if out.total != -6:
        raise InternalConsistencyError("stage w3 lost charge")
    return out


def run_discharging(sphere):
    """Run all three stages; returns (w1, w2, w3) states."""
    w1 = initial_charges(sphere)
    w2 = discharge_faces(w1, sphere)
    w3 = discharge_vertices(w2, sphere)
    return w1, w2, w3
