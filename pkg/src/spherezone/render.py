"""Deterministic SVG rendering of a projective arrangement.

The projective plane is drawn as the unit disk: every element is represented
on the upper hemisphere (antipodal flip when needed) and projected
orthographically to (x, y).  Lines become curves split where they cross the
rim; floats only affect pixels, never combinatorics.
"""

from __future__ import annotations

import math

_SAMPLES = 256
_PALETTE = {
    2: "#d9d9d9", 3: "#a6cee3", 4: "#b2df8a", 5: "#fdbf6f",
    6: "#fb9a99", 7: "#cab2d6",
}


def _unit(v):
    norm = math.sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2])
    return (v[0] / norm, v[1] / norm, v[2] / norm)


def _float3(triple):
    return tuple(float(x) for x in triple)


def _fmt(x):
    return f"{x:.4f}"


def _circle_basis(c):
    c = _unit(_float3(c))
    ref = (0.0, 0.0, 1.0) if abs(c[2]) < 0.9 else (1.0, 0.0, 0.0)
    u = (
        c[1] * ref[2] - c[2] * ref[1],
        c[2] * ref[0] - c[0] * ref[2],
        c[0] * ref[1] - c[1] * ref[0],
    )
    u = _unit(u)
    w = (
        c[1] * u[2] - c[2] * u[1],
        c[2] * u[0] - c[0] * u[2],
        c[0] * u[1] - c[1] * u[0],
    )
    return u, w


def _line_polylines(coeffs):
    """Sample the half great circle, flipped to z >= 0, split at the rim."""
    u, w = _circle_basis(coeffs)
    pieces, current = [], []
    prev_sign = 0
    for k in range(_SAMPLES + 1):
        theta = math.pi * k / _SAMPLES
        p = tuple(math.cos(theta) * u[i] + math.sin(theta) * w[i]
                  for i in range(3))
        s = 1 if p[2] > 1e-12 else (-1 if p[2] < -1e-12 else 0)
        if s == 0:
            s = prev_sign or 1
        if prev_sign and s != prev_sign and current:
            pieces.append(current)
            current = []
        prev_sign = s
        current.append((s * p[0], s * p[1]))
    if current:
        pieces.append(current)
    return pieces


def _project_vertex(point):
    p = _unit(_float3(point))
    if p[2] < 0 or (p[2] == 0 and (p[0] < 0 or (p[0] == 0 and p[1] < 0))):
        p = (-p[0], -p[1], -p[2])
    return (p[0], p[1])


def render_svg(proj, tint_faces=False, vertex_labels=None, size=600):
    """SVG text for a projective arrangement.

    ``vertex_labels`` maps projective vertex index to label text (e.g. C(v)).
    Output is a pure function of the arrangement and flags.
    """
    half = size / 2.0
    scale = half * 0.95

    def to_px(x, y):
        return (half + scale * x, half - scale * y)

    out = []
    out.append(
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" '
        f'height="{size}" viewBox="0 0 {size} {size}">'
    )
    out.append(
        f'<circle cx="{_fmt(half)}" cy="{_fmt(half)}" r="{_fmt(scale)}" '
        'fill="white" stroke="#888" stroke-width="1"/>'
    )

    if tint_faces:
        out.append('<g class="faces">')
        for pf in range(proj.F):
            fid = proj.face_reps[pf]
            cycle = proj.sphere.face_vertex_cycle(fid)
            pts = [_unit(_float3(proj.sphere.vertices[v].point)) for v in cycle]
            mean_z = sum(p[2] for p in pts) / len(pts)
            if mean_z < 0:
                pts = [(-x, -y, -z) for x, y, z in pts]
            if any(p[2] < -1e-9 for p in pts):
                continue        # face crosses the rim; leave untinted
            color = _PALETTE.get(proj.face_size(pf), "#eeeeee")
            coords = " ".join(
                "{},{}".format(*map(_fmt, to_px(p[0], p[1]))) for p in pts
            )
            out.append(
                f'<polygon points="{coords}" fill="{color}" '
                'fill-opacity="0.5" stroke="none"/>'
            )
        out.append("</g>")

    for li, line in enumerate(proj.sphere.lines.lines):
        out.append(f'<g class="line" data-line="{li}">')
        for piece in _line_polylines(line.coeffs):
            coords = " ".join(
                "{},{}".format(*map(_fmt, to_px(x, y))) for x, y in piece
            )
            out.append(
                f'<polyline points="{coords}" fill="none" stroke="#1f3b73" '
                'stroke-width="1.2"/>'
            )
        out.append("</g>")

    out.append('<g class="vertices">')
    for pv in range(proj.V):
        x, y = _project_vertex(proj.vertex_point(pv))
        px, py = to_px(x, y)
        out.append(
            f'<circle cx="{_fmt(px)}" cy="{_fmt(py)}" r="2.5" fill="#b30000"/>'
        )
        if vertex_labels and pv in vertex_labels:
            out.append(
                f'<text x="{_fmt(px + 4)}" y="{_fmt(py - 4)}" '
                f'font-size="10" fill="#333">{vertex_labels[pv]}</text>'
            )
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
