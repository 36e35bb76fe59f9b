"""Dependency-free SVG line charts of experiment medians.

Each statistic gets its own panel and y-scale, because the raw magnitudes
differ by orders of magnitude (the energy statistic grows with sample size).
Output is a pure function of the table, so identical tables give
byte-identical files.
"""
from xml.sax.saxutils import escape

from .experiments import DESIGNS, STAT_COLUMNS

_LABELS = {"t_ce": "T_ce (copula entropy)", "t_mi": "T_mi (mutual information)", "mmd2": "MMD^2", "energy": "energy"}
_COLORS = {"t_ce": "#d62728", "t_mi": "#1f77b4", "mmd2": "#2ca02c", "energy": "#9467bd"}
_PANEL_W, _PANEL_H = 360, 260
_MARGIN = {"left": 64, "right": 16, "top": 34, "bottom": 46}


def _num(x):
    return f"{x:.2f}"


def _tick(x):
    return f"{x:.4g}"


def _panel(ox, oy, xs, ys, name, xlabel):
    left, top = ox + _MARGIN["left"], oy + _MARGIN["top"]
    width = _PANEL_W - _MARGIN["left"] - _MARGIN["right"]
    height = _PANEL_H - _MARGIN["top"] - _MARGIN["bottom"]
    x0, x1 = min(xs), max(xs)
    y0, y1 = min(ys), max(ys)
    if x1 == x0:
        x1 = x0 + 1.0
    if y1 == y0:
        y0, y1 = y0 - 0.5, y1 + 0.5

    def px(x):
        return left + (x - x0) / (x1 - x0) * width

    def py(y):
        return top + height - (y - y0) / (y1 - y0) * height

    points = " ".join(f"{_num(px(x))},{_num(py(y))}" for x, y in zip(xs, ys))
    bottom = top + height
    out = [
        f'<g id="panel-{name}">',
        f'<text x="{_num(left + width / 2)}" y="{_num(oy + 20)}" text-anchor="middle" font-size="14">'
        f"{escape(_LABELS[name])}</text>",
        f'<line x1="{_num(left)}" y1="{_num(bottom)}" x2="{_num(left + width)}" y2="{_num(bottom)}" stroke="black"/>',
        f'<line x1="{_num(left)}" y1="{_num(top)}" x2="{_num(left)}" y2="{_num(bottom)}" stroke="black"/>',
        f'<text x="{_num(left)}" y="{_num(bottom + 16)}" text-anchor="middle" font-size="11">{_tick(x0)}</text>',
        f'<text x="{_num(left + width)}" y="{_num(bottom + 16)}" text-anchor="middle" font-size="11">{_tick(x1)}</text>',
        f'<text x="{_num(left - 4)}" y="{_num(bottom)}" text-anchor="end" font-size="11">{_tick(y0)}</text>',
        f'<text x="{_num(left - 4)}" y="{_num(top + 8)}" text-anchor="end" font-size="11">{_tick(y1)}</text>',
        f'<text x="{_num(left + width / 2)}" y="{_num(bottom + 36)}" text-anchor="middle" font-size="12">'
        f"{escape(xlabel)}</text>",
        f'<text x="{_num(ox + 14)}" y="{_num(top + height / 2)}" text-anchor="middle" font-size="12" '
        f'transform="rotate(-90 {_num(ox + 14)} {_num(top + height / 2)})">statistic</text>',
        f'<polyline fill="none" stroke="{_COLORS[name]}" stroke-width="2" points="{points}"/>',
        "</g>",
    ]
    return out


def render_svg(table, sim):
    """SVG 1.1 document with the median curve of each statistic for `sim`."""
    params, medians = table.medians(sim)
    xlabel = DESIGNS[sim][2] if sim in DESIGNS else "parameter"
    width, height = 2 * _PANEL_W, 2 * _PANEL_H + 30
    lines = [
        '<?xml version="1.0" encoding="UTF-8" standalone="no"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'<rect x="0" y="0" width="{width}" height="{height}" fill="white"/>',
        f'<text x="{width / 2:.2f}" y="20" text-anchor="middle" font-size="16">'
        f"Simulation {sim}: median statistics versus {escape(xlabel)}</text>",
    ]
    for i, name in enumerate(STAT_COLUMNS):
        ox, oy = (i % 2) * _PANEL_W, 30 + (i // 2) * _PANEL_H
        lines += _panel(ox, oy, params.tolist(), medians[name].tolist(), name, xlabel)
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def emit_plot(table, sim, path):
    """Write :func:`render_svg` output to `path` and return the document."""
    doc = render_svg(table, sim)
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(doc)
    return doc
