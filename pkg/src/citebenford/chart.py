"""Static SVG grouped bar chart: observed vs model first-digit proportions.

Layout constants (pixels): canvas 640 x 400; plot margins top 56, right 24,
bottom 56, left 64. Each digit gets an equal slot with two bars of 35% of the
slot width each. The y axis runs from 0 to the smallest multiple of 0.05 at
or above the largest plotted proportion, with a tick every 0.05 (every 0.1
above 0.5). The uniform reference 1/(base-1) is a dashed horizontal line.
"""

from __future__ import annotations

import math
import os
from pathlib import Path
from xml.sax.saxutils import escape

from citebenford.errors import DomainError
from citebenford.report import AnalysisReport
from citebenford.sigdigits import digit_symbol

WIDTH, HEIGHT = 640, 400
MARGIN_TOP, MARGIN_RIGHT, MARGIN_BOTTOM, MARGIN_LEFT = 56, 24, 56, 64
BAR_FRACTION = 0.35
OBSERVED_COLOR = "#4477aa"
MODEL_COLOR = "#ee6677"
UNIFORM_COLOR = "#333333"


def _axis_max(peak: float) -> tuple[float, float]:
    top = max(0.05, math.ceil(round(peak / 0.05, 9)) * 0.05)
    step = 0.1 if top > 0.5 else 0.05
    if step == 0.1:
        top = math.ceil(round(top / 0.1, 9)) * 0.1
    return top, step


def render_svg(report: AnalysisReport, title: str | None = None) -> str:
    obs = report.observed
    if obs.N == 0:
        raise DomainError("cannot chart an empty distribution")
    observed = obs.proportions()
    model = report.model_proportions
    uniform = 1.0 / (obs.base - 1)
    top, step = _axis_max(max(max(observed), max(model), uniform))

    plot_w = WIDTH - MARGIN_LEFT - MARGIN_RIGHT
    plot_h = HEIGHT - MARGIN_TOP - MARGIN_BOTTOM
    x0, y0 = MARGIN_LEFT, MARGIN_TOP + plot_h
    slot = plot_w / len(observed)
    bar_w = slot * BAR_FRACTION

    def y_of(v: float) -> float:
        return y0 - v / top * plot_h

    if title is None:
        name = (report.source or "data").split(" (", 1)[0]
        title = f"First digits of {name} (N={obs.N})"
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" '
        f'viewBox="0 0 {WIDTH} {HEIGHT}" font-family="sans-serif" font-size="12">',
        f"<title>{escape(title)}</title>",
        f'<rect x="0" y="0" width="{WIDTH}" height="{HEIGHT}" fill="#ffffff"/>',
        f'<text x="{WIDTH / 2:.2f}" y="22" text-anchor="middle" font-size="14">{escape(title)}</text>',
    ]
    n_ticks = int(round(top / step))
    for i in range(n_ticks + 1):
        v = i * step
        y = y_of(v)
        out.append(f'<line x1="{x0}" y1="{y:.2f}" x2="{x0 + plot_w}" y2="{y:.2f}" stroke="#dddddd"/>')
        out.append(f'<text x="{x0 - 6}" y="{y + 4:.2f}" text-anchor="end">{v:.2f}</text>')
    for i, (d, p, m) in enumerate(zip(obs.digits, observed, model)):
        cx = x0 + slot * (i + 0.5)
        for series, value, color, bx in (
            ("observed", p, OBSERVED_COLOR, cx - bar_w),
            ("model", m, MODEL_COLOR, cx),
        ):
            y = y_of(value)
            out.append(
                f'<rect class="{series}" data-digit="{d}" data-value="{value:.3f}" x="{bx:.2f}" y="{y:.2f}" '
                f'width="{bar_w:.2f}" height="{y0 - y:.2f}" fill="{color}"/>'
            )
        out.append(f'<text x="{cx:.2f}" y="{y0 + 18}" text-anchor="middle">{digit_symbol(d)}</text>')
    uy = y_of(uniform)
    out.append(
        f'<line class="uniform" data-value="{uniform:.3f}" x1="{x0}" y1="{uy:.2f}" x2="{x0 + plot_w}" '
        f'y2="{uy:.2f}" stroke="{UNIFORM_COLOR}" stroke-dasharray="6 4"/>'
    )
    out.append(f'<line x1="{x0}" y1="{y0}" x2="{x0 + plot_w}" y2="{y0}" stroke="#000000"/>')
    out.append(f'<line x1="{x0}" y1="{MARGIN_TOP}" x2="{x0}" y2="{y0}" stroke="#000000"/>')
    out.append(f'<text x="{x0 + plot_w / 2:.2f}" y="{HEIGHT - 14}" text-anchor="middle">first significant digit</text>')
    out.append(
        f'<text x="16" y="{MARGIN_TOP + plot_h / 2:.2f}" text-anchor="middle" '
        f'transform="rotate(-90 16 {MARGIN_TOP + plot_h / 2:.2f})">proportion</text>'
    )
    legend_items = (
        ("observed", OBSERVED_COLOR, False),
        (report.model.describe(), MODEL_COLOR, False),
        (f"uniform {uniform:.3f}", UNIFORM_COLOR, True),
    )
    for j, (label, color, dashed) in enumerate(legend_items):
        ly = MARGIN_TOP + 12 + 16 * j
        lx = x0 + plot_w - 230
        if dashed:
            out.append(f'<line x1="{lx}" y1="{ly - 4}" x2="{lx + 14}" y2="{ly - 4}" stroke="{color}" stroke-dasharray="6 4"/>')
        else:
            out.append(f'<rect x="{lx}" y="{ly - 10}" width="14" height="10" fill="{color}"/>')
        out.append(f'<text x="{lx + 20}" y="{ly}">{escape(label)}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def write_svg(report: AnalysisReport, path: str | os.PathLike, title: str | None = None) -> Path:
    """Render first, then write; nothing is written if rendering fails."""
    text = render_svg(report, title)
    path = Path(path)
    path.write_text(text, encoding="utf-8", newline="\n")
    return path
