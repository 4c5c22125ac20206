"""SVG figures: the tessellated disk, the region Phi and the boundary circle.

Points of R^3 are drawn by orthogonal projection onto the plane x + y + z = 0,
which is parallel to the plane of the central triangle of Phi.
"""

from __future__ import annotations

import math
from typing import Iterable, Sequence

from .psl2 import ProjPoint
from .stability import pi_map, tessellation_triangles

_U1 = (1 / math.sqrt(2), -1 / math.sqrt(2), 0.0)
_U2 = (1 / math.sqrt(6), 1 / math.sqrt(6), -2 / math.sqrt(6))
SIZE = 600
_VERTS = {"P1": ProjPoint(1, 0), "P2": ProjPoint(0, 1), "X": ProjPoint(1, -1)}


def project(v: Sequence[float]) -> tuple[float, float]:
    x = sum(a * b for a, b in zip(v, _U1))
    y = sum(a * b for a, b in zip(v, _U2))
    # unit vectors project into a disk of radius <= 1
    s = SIZE * 0.45
    return (SIZE / 2 + s * x, SIZE / 2 + s * y)


def _arc(p: Sequence[float], q: Sequence[float], steps: int = 48) -> list[tuple[float, float]]:
    """Great-circle arc between unit vectors p and q, projected."""
    dot = max(-1.0, min(1.0, sum(a * b for a, b in zip(p, q))))
    om = math.acos(dot)
    out = []
    for i in range(steps + 1):
        t = i / steps
        if om < 1e-12:
            v = p
        else:
            a, b = math.sin((1 - t) * om) / math.sin(om), math.sin(t * om) / math.sin(om)
            v = [a * x + b * y for x, y in zip(p, q)]
        out.append(project(v))
    return out


def _pts(points: Iterable[tuple[float, float]]) -> str:
    return " ".join(f"{x:.3f},{y:.3f}" for x, y in points)


def _doc(body: list[str]) -> str:
    head = f'<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">'
    return "\n".join([head, '<rect width="100%" height="100%" fill="white"/>', *body, "</svg>"]) + "\n"


def _label(x: float, y: float, text: str, size: int = 11) -> str:
    return f'<text x="{x:.3f}" y="{y:.3f}" font-size="{size}" text-anchor="middle" font-family="sans-serif">{text}</text>'


def _outline() -> list[str]:
    v = [pi_map(_VERTS[k]) for k in ("P1", "P2", "X")]
    out = []
    for i in range(3):
        out.append(f'<polyline points="{_pts(_arc(v[i], v[(i + 1) % 3]))}" fill="none" stroke="black" stroke-width="1.5"/>')
    return out


def exchange_graph(depth: int = 3, label_depth: int = 2) -> str:
    """Translates of Lambda with body length < depth; labels up to label_depth."""
    body = _outline()
    for nf, tri in tessellation_triangles(max(depth - 1, 0)):
        v = [pi_map(p) for p in tri]
        body.append(f'<polygon points="{_pts(project(p) for p in v)}" fill="none" stroke="#3060a0" stroke-width="0.6"/>')
        if nf.body_length() <= label_depth:
            cx, cy = project([sum(p[i] for p in v) / 3 for i in range(3)])
            body.append(_label(cx, cy, nf.text(), 10 if nf.body_length() else 12))
    return _doc(body)


def phi_region() -> str:
    v = {k: pi_map(p) for k, p in _VERTS.items()}
    order = ("P1", "P2", "X")
    body = [f'<polygon points="{_pts(project(v[k]) for k in order)}" fill="#d8e4f4" stroke="black"/>']
    for i in range(3):
        a, b = v[order[i]], v[order[(i + 1) % 3]]
        seg = _arc(a, b)
        body.append(f'<polygon points="{_pts(seg)}" fill="#f4e4c8" stroke="black"/>')
    for k in order:
        x, y = project(v[k])
        body.append(f'<circle cx="{x:.3f}" cy="{y:.3f}" r="3"/>')
        body.append(_label(x, y - 8, k, 13))
    return _doc(body)


def _circle_angle(p: ProjPoint) -> float:
    """[a:c] -> twice its angle in the upper half plane, so P^1(R) closes up."""
    return 2 * math.atan2(p.c, p.a) if p.c else 0.0


def boundary_circle(farey_depth: int = 3) -> str:
    cx = cy = SIZE / 2
    r = SIZE * 0.4
    arcs = (("[P1,P2]", ProjPoint(1, 0), ProjPoint(0, 1), "#c03030"),
            ("[P2,X]", ProjPoint(0, 1), ProjPoint(1, -1), "#30a030"),
            ("[X,P1]", ProjPoint(1, -1), ProjPoint(-1, 0), "#3030c0"))
    body = []
    for name, p, q, colour in arcs:
        t0 = _circle_angle(p)
        t1 = _circle_angle(q) if q.c else 2 * math.pi
        pts = [(cx + r * math.cos(t0 + (t1 - t0) * i / 60), cy - r * math.sin(t0 + (t1 - t0) * i / 60)) for i in range(61)]
        body.append(f'<polyline points="{_pts(pts)}" fill="none" stroke="{colour}" stroke-width="3"/>')
        tm = (t0 + t1) / 2
        body.append(_label(cx + 1.15 * r * math.cos(tm), cy - 1.15 * r * math.sin(tm), name, 12))
    for nf, tri in tessellation_triangles(farey_depth):
        for p in tri:
            t = _circle_angle(p)
            body.append(f'<circle cx="{cx + r * math.cos(t):.3f}" cy="{cy - r * math.sin(t):.3f}" r="1.5" fill="gray"/>')
    for k, p in _VERTS.items():
        t = _circle_angle(p)
        x, y = cx + r * math.cos(t), cy - r * math.sin(t)
        body.append(f'<circle cx="{x:.3f}" cy="{y:.3f}" r="5"/>')
        body.append(_label(cx + 0.85 * r * math.cos(t), cy - 0.85 * r * math.sin(t) + 4, k, 14))
    return _doc(body)


FIGURES = {"exchange-graph": exchange_graph, "phi-region": phi_region, "boundary-circle": boundary_circle}
