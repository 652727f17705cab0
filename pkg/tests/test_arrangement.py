"""Structural tests of the sphere half-edge complex and its projective
quotient: Euler counts, degree-4 vertices, antipodal symmetry, face sizes,
witness points, and point location."""

import pytest

from conftest import arrangements
from spherezone.arrangement import build_sphere, quotient_projective
from spherezone.errors import DegenerateInputError, OnBoundaryError
from spherezone.geometry import GreatCircleLine, LineSet

COORD_TRIANGLE = [GreatCircleLine.of(1, 0, 0), GreatCircleLine.of(0, 1, 0),
                  GreatCircleLine.of(0, 0, 1)]


def test_octant_decomposition():
    sphere = build_sphere(LineSet.of(COORD_TRIANGLE))
    assert (sphere.vertex_count, sphere.edge_count, sphere.face_count) == (6, 12, 8)
    assert sphere.face_sizes() == {3: 8}


def test_projective_triangle():
    proj = quotient_projective(build_sphere(LineSet.of(COORD_TRIANGLE)))
    assert (proj.V, proj.E, proj.F) == (3, 6, 4)
    assert proj.face_sizes() == {3: 4}


def test_degenerate_input_rejected():
    bad = LineSet.of([GreatCircleLine.of(1, 0, 0), GreatCircleLine.of(0, 1, 0),
                      GreatCircleLine.of(1, -1, 0)])
    with pytest.raises(DegenerateInputError):
        build_sphere(bad)


def test_n4_counts_and_f_vector():
    _, proj = arrangements(4, 0)
    assert (proj.V, proj.E, proj.F) == (12 // 2, 24 // 2, 7)
    # forced by 3 f3 + 4 f4 = 2E = 24 and f3 + f4 = 7
    assert proj.face_sizes() == {3: 4, 4: 3}


def test_n5_forced_counts():
    _, proj = arrangements(5, 0)
    assert (proj.V, proj.E, proj.F) == (10, 20, 11)


@pytest.mark.parametrize("n", range(3, 16))
def test_euler_and_degree_invariants(n):
    for seed in range(4):
        sphere, proj = arrangements(n, seed)
        v, e, f = sphere.vertex_count, sphere.edge_count, sphere.face_count
        assert (v, e, f) == (n * (n - 1), 2 * n * (n - 1), n * (n - 1) + 2)
        assert v - e + f == 2
        assert proj.V - proj.E + proj.F == 1
        assert (proj.V, proj.E, proj.F) == (v // 2, e // 2, f // 2)
        for vertex in sphere.vertices:
            assert len(sphere.outgoing_halfedges(vertex.id)) == 4
        # each circle carries 2(n-1) vertices
        for cyc in sphere.circle_cycles:
            assert len(cyc) == 2 * (n - 1)


@pytest.mark.parametrize("n,seed", [(4, 1), (6, 2), (9, 3), (12, 0)])
def test_double_counting(n, seed):
    sphere, proj = arrangements(n, seed)
    assert sum(k * c for k, c in sphere.face_sizes().items()) == 2 * sphere.edge_count
    assert sum(sphere.face_sizes().values()) == sphere.face_count
    assert sum(k * c for k, c in proj.face_sizes().items()) == 2 * proj.E


@pytest.mark.parametrize("n,seed", [(4, 0), (7, 1), (10, 2)])
def test_sphere_histogram_doubles_projective(n, seed):
    sphere, proj = arrangements(n, seed)
    doubled = {k: 2 * c for k, c in proj.face_sizes().items()}
    assert dict(sphere.face_sizes()) == doubled


@pytest.mark.parametrize("n,seed", [(4, 0), (5, 5), (8, 2), (11, 1)])
def test_no_adjacent_triangles(n, seed):
    sphere, _ = arrangements(n, seed)
    for h in sphere.halfedges:
        twin = sphere.halfedges[h.twin]
        assert not (sphere.faces[h.face].size == 3
                    and sphere.faces[twin.face].size == 3)


@pytest.mark.parametrize("n,seed", [(3, 0), (5, 1), (8, 0)])
def test_witness_round_trip(n, seed):
    """Every face's interior witness locates back to that face."""
    sphere, proj = arrangements(n, seed)
    for face in sphere.faces:
        w = sphere.face_witness(face.id)
        assert sphere.locate_face(w) == face.id
    for pf in range(proj.F):
        w = sphere.face_witness(proj.face_reps[pf])
        assert proj.locate_face(w) == pf


def test_locate_face_sign_vector():
    sphere = build_sphere(LineSet.of(COORD_TRIANGLE))
    fid = sphere.locate_face((1, 1, 1))
    assert sphere.faces[fid].sign_vector == (1, 1, 1)


def test_locate_on_boundary_errors():
    sphere = build_sphere(LineSet.of(COORD_TRIANGLE))
    with pytest.raises(OnBoundaryError):
        sphere.locate_face((0, 1, 1))


def test_antipodal_involution():
    sphere, _ = arrangements(6, 3)
    for v in sphere.vertices:
        assert v.antipode != v.id
        assert sphere.vertices[v.antipode].antipode == v.id
    for f in sphere.faces:
        assert f.antipode != f.id
        assert sphere.faces[f.antipode].antipode == f.id
        assert sphere.faces[f.antipode].size == f.size


def test_two_line_arrangement_digons():
    ls = LineSet.of([GreatCircleLine.of(1, 0, 0), GreatCircleLine.of(0, 1, 1)])
    sphere = build_sphere(ls)
    assert (sphere.vertex_count, sphere.edge_count, sphere.face_count) == (2, 4, 4)
    assert sphere.face_sizes() == {2: 4}
    for face in sphere.faces:
        assert sphere.locate_face(sphere.face_witness(face.id)) == face.id
