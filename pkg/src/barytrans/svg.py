"""Static SVG strip of a polygon trajectory (one panel per B-step)."""

from __future__ import annotations

from xml.sax.saxutils import escape

from .classify import Trajectory, TypeVerdict

PANEL = 180
PAD = 16


def _panel(x0: int, vertices, title: str, stroke: str, dashed: bool = False) -> list[str]:
    reach = max([abs(c) for v in vertices for c in v] + [1])
    scale = (PANEL / 2 - PAD) / reach
    cx, cy = x0 + PANEL / 2, PANEL / 2 + 20

    def pt(v):
        return f"{cx + float(v[0]) * scale:.2f},{cy - float(v[1]) * scale:.2f}"

    out = [
        f'<rect x="{x0}" y="20" width="{PANEL}" height="{PANEL}" fill="none" stroke="#ccc"/>',
        f'<line x1="{x0 + 4}" y1="{cy}" x2="{x0 + PANEL - 4}" y2="{cy}" stroke="#ddd"/>',
        f'<line x1="{cx}" y1="24" x2="{cx}" y2="{PANEL + 16}" stroke="#ddd"/>',
        f'<text x="{cx}" y="14" text-anchor="middle" font-size="12" font-family="sans-serif">{escape(title)}</text>',
    ]
    dash = ' stroke-dasharray="4 3"' if dashed else ""
    if len(vertices) >= 3:
        out.append(f'<polygon points="{" ".join(pt(v) for v in vertices)}" fill="{stroke}" '
                   f'fill-opacity="0.12" stroke="{stroke}"{dash}/>')
    elif len(vertices) == 2:
        out.append(f'<polyline points="{pt(vertices[0])} {pt(vertices[1])}" stroke="{stroke}"{dash}/>')
    for v in vertices:
        x, y = pt(v).split(",")
        out.append(f'<circle cx="{x}" cy="{y}" r="2.5" fill="{stroke}"/>')
    out.append(f'<circle cx="{cx}" cy="{cy}" r="2" fill="#000"/>')
    return out


def trajectory_svg(verdict: TypeVerdict, traj: Trajectory) -> str:
    panels = [(s.polytope.vertices, f"B^{s.step}" + (" KE" if s.kahler_einstein else ""), "#1f5fbf", False)
              for s in traj.steps]
    if traj.terminal is not None:
        panels.append((traj.terminal.vertices, f"B^{len(traj.steps)} (not Fano)", "#c0392b", True))
    width = PANEL * len(panels)
    height = PANEL + 44
    body = []
    for i, (verts, title, stroke, dashed) in enumerate(panels):
        body.extend(_panel(i * PANEL, verts, title, stroke, dashed))
    caption = escape(str(verdict.to_dict()))
    body.append(f'<text x="4" y="{height - 6}" font-size="11" font-family="monospace">{caption}</text>')
    return (f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
            f'viewBox="0 0 {width} {height}">\n' + "\n".join(body) + "\n</svg>\n")
