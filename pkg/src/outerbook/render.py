"""Static SVG arc diagrams of certificates."""

from __future__ import annotations

import colorsys
from html import escape

from .embedding import BookEmbedding, verify
from .errors import InvalidCertificate
from .graph import Graph

_BASE_COLORS = (
    "#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd",
    "#8c564b", "#e377c2", "#17becf", "#bcbd22", "#7f7f7f",
)


def page_color(page: int) -> str:
    if page < len(_BASE_COLORS):
        return _BASE_COLORS[page]
    # golden-angle hues past the fixed palette
    hue = (page * 0.618033988749895) % 1.0
    r, g, b = colorsys.hls_to_rgb(hue, 0.45, 0.65)
    return "#{:02x}{:02x}{:02x}".format(round(r * 255), round(g * 255), round(b * 255))


def render_svg(
    g: Graph,
    emb: BookEmbedding,
    style: str = "color",
    spacing: int = 40,
    labels: dict[int, str] | None = None,
    force: bool = False,
) -> str:
    """Vertices on a horizontal spine, edges as semicircles coloured by page.

    ``style="color"`` draws every page above the spine (one colour per page);
    ``style="halves"`` puts even pages above and odd pages below.
    """
    if style not in ("color", "halves"):
        raise ValueError(f"unknown style {style!r}")
    report = verify(g, emb)
    if not report.ok and not force:
        raise InvalidCertificate(f"refusing to render invalid certificate: {report.violations[0]}")

    margin = 20
    pos = emb.order.position
    max_r = max((abs(pos[u] - pos[v]) * spacing / 2 for u, v in emb.page_of), default=0)
    width = margin * 2 + max(len(emb.order) - 1, 0) * spacing
    above = max_r + margin
    below = (max_r if style == "halves" else 0) + margin + 14
    height = above + below
    spine_y = above

    def x(v: int) -> float:
        return margin + pos[v] * spacing

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width:g}" height="{height:g}" '
        f'viewBox="0 0 {width:g} {height:g}">',
        f'<line class="spine" x1="{margin:g}" y1="{spine_y:g}" x2="{width - margin:g}" '
        f'y2="{spine_y:g}" stroke="#444" stroke-width="1"/>',
    ]
    for (u, v), p in sorted(emb.page_of.items(), key=lambda item: (item[1], item[0])):
        x1, x2 = sorted((x(u), x(v)))
        r = (x2 - x1) / 2
        sweep = 0 if style == "halves" and p % 2 == 1 else 1
        out.append(
            f'<path class="arc page-{p}" d="M {x1:g} {spine_y:g} A {r:g} {r:g} 0 0 {sweep} '
            f'{x2:g} {spine_y:g}" fill="none" stroke="{page_color(p)}" stroke-width="2"/>'
        )
    for v in emb.order.sequence:
        out.append(f'<circle class="vertex" cx="{x(v):g}" cy="{spine_y:g}" r="4" fill="#000"/>')
        text = escape(labels.get(v, str(v)) if labels else str(v))
        out.append(
            f'<text x="{x(v):g}" y="{spine_y + 16:g}" font-size="10" '
            f'text-anchor="middle">{text}</text>'
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"
