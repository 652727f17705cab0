"""SVG output: structure, determinism, options."""

from conftest import arrangements
from spherezone.arrangement import build_sphere, quotient_projective
from spherezone.geometry import GreatCircleLine, LineSet
from spherezone.render import render_svg


def triangle_proj():
    ls = LineSet.of([GreatCircleLine.of(1, 0, 0), GreatCircleLine.of(0, 1, 0),
                     GreatCircleLine.of(0, 0, 1)])
    return quotient_projective(build_sphere(ls))


def test_triangle_structure():
    svg = render_svg(triangle_proj())
    assert svg.startswith("<svg ")
    assert svg.rstrip().endswith("</svg>")
    assert svg.count('<g class="line"') == 3
    assert svg.count('<g class="vertices"') == 1
    # one marker per projective vertex
    assert svg.count('fill="#b30000"') == 3


def test_deterministic_bytes():
    _, proj = arrangements(6, 0)
    assert render_svg(proj) == render_svg(proj)
    assert render_svg(proj, tint_faces=True) == render_svg(proj, tint_faces=True)


def test_vertex_labels():
    svg = render_svg(triangle_proj(), vertex_labels={0: "a", 2: "c"})
    assert svg.count("<text ") == 2
    assert ">a</text>" in svg and ">c</text>" in svg


def test_tint_adds_face_group():
    _, proj = arrangements(5, 1)
    plain = render_svg(proj)
    tinted = render_svg(proj, tint_faces=True)
    assert '<g class="faces">' not in plain
    assert '<g class="faces">' in tinted
    assert tinted.count("<polygon ") >= 1


def test_size_parameter():
    svg = render_svg(triangle_proj(), size=300)
    assert 'width="300"' in svg and 'height="300"' in svg
