"""Deterministic SVG rendering of scenes, plans, and histograms.

Pure string assembly; byte-identical output for identical inputs.
"""

from __future__ import annotations

from typing import Optional

from .cspace import CSpaceParams, inflate
from .histogram import PolarHistogram
from .planner import Plan
from .scene import Scene

_CANVAS = 720.0   # px across the workspace's longer side
_PAD = 40.0       # px border around the workspace
_HIST_H = 140.0   # px height of the histogram strip

_WORKSPACE_STYLE = 'fill="#fafafa" stroke="#555555" stroke-width="1.5"'
_OBSTACLE_STYLE = 'fill="#c8d6e5" stroke="#4a6fa5" stroke-width="1.5"'
_TARGET_STYLE = 'fill="#f6c344" stroke="#b3822a" stroke-width="1.5"'
_INFLATED_STYLE = ('fill="none" stroke="#4a6fa5" stroke-width="0.8" '
                   'stroke-dasharray="4 3" opacity="0.6"')
_BAR_STYLE = 'fill="#4a6fa5"'
_ZERO_BAR_STYLE = 'fill="#2e9e5b"'


def _fmt(v: float) -> str:
    return f"{v:.2f}"


def render_svg(scene: Scene, plan: Optional[Plan] = None,
               histogram: Optional[PolarHistogram] = None,
               show_inflated: bool = False,
               params: CSpaceParams = CSpaceParams()) -> str:
    """Scene as an SVG document: workspace frame, obstacle disks, target
    disk, base marker; optionally inflated outlines, grasp-order badges from
    a plan, and a histogram strip below the scene."""
    ws = scene.workspace
    span_x = ws.xmax - ws.xmin
    span_y = ws.ymax - ws.ymin
    # leave room for the base marker, which may sit outside the workspace
    bx, by = scene.base
    lo_x, hi_x = min(ws.xmin, bx), max(ws.xmax, bx)
    lo_y, hi_y = min(ws.ymin, by), max(ws.ymax, by)
    scale = _CANVAS / max(hi_x - lo_x, hi_y - lo_y, 1e-9)

    def px(x: float) -> float:
        return _PAD + (x - lo_x) * scale

    def py(y: float) -> float:
        return _PAD + (hi_y - y) * scale  # flip: SVG y grows downward

    width = 2 * _PAD + (hi_x - lo_x) * scale
    height = 2 * _PAD + (hi_y - lo_y) * scale
    hist_top = height
    if histogram is not None:
        height += _HIST_H + _PAD

    order = {}
    if plan is not None:
        order = {step.object_id: i + 1 for i, step in enumerate(plan.steps)}

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_fmt(width)}" '
        f'height="{_fmt(height)}" viewBox="0 0 {_fmt(width)} {_fmt(height)}">',
        f'<rect x="{_fmt(px(ws.xmin))}" y="{_fmt(py(ws.ymax))}" '
        f'width="{_fmt(span_x * scale)}" height="{_fmt(span_y * scale)}" '
        f'{_WORKSPACE_STYLE}/>',
    ]

    if show_inflated:
        for ob in inflate(scene, params):
            parts.append(
                f'<circle cx="{_fmt(px(ob.x))}" cy="{_fmt(py(ob.y))}" '
                f'r="{_fmt(ob.r_total * scale)}" {_INFLATED_STYLE}/>')

    for o in scene.objects:
        style = _TARGET_STYLE if o.id == scene.target_id else _OBSTACLE_STYLE
        parts.append(
            f'<circle cx="{_fmt(px(o.x))}" cy="{_fmt(py(o.y))}" '
            f'r="{_fmt(o.radius * scale)}" {style}/>')
        label = o.id
        if o.id in order:
            label = f"{o.id} #{order[o.id]}"
        parts.append(
            f'<text x="{_fmt(px(o.x))}" y="{_fmt(py(o.y) - o.radius * scale - 3)}" '
            f'font-size="10" text-anchor="middle" fill="#333333">{label}</text>')

    parts.append(
        f'<rect x="{_fmt(px(bx) - 5)}" y="{_fmt(py(by) - 5)}" width="10" '
        f'height="10" fill="#333333"/>')
    parts.append(
        f'<text x="{_fmt(px(bx))}" y="{_fmt(py(by) + 18)}" font-size="10" '
        f'text-anchor="middle" fill="#333333">base</text>')

    if histogram is not None:
        mags = histogram.magnitudes
        n = len(mags)
        peak = float(mags.max()) if n and float(mags.max()) > 0.0 else 1.0
        strip_w = width - 2 * _PAD
        bar_w = strip_w / n
        base_y = hist_top + _HIST_H
        for k in range(n):
            mag = float(mags[k])
            h = _HIST_H * mag / peak
            style = _BAR_STYLE if mag > 0.0 else _ZERO_BAR_STYLE
            if mag == 0.0:
                h = 2.0  # make open sectors visible
            parts.append(
                f'<rect x="{_fmt(_PAD + k * bar_w)}" y="{_fmt(base_y - h)}" '
                f'width="{_fmt(max(bar_w - 0.5, 0.5))}" height="{_fmt(h)}" '
                f'{style}/>')
        cfg = histogram.config
        for frac, angle in ((0.0, -cfg.window), (0.5, 0.0), (1.0, cfg.window)):
            parts.append(
                f'<text x="{_fmt(_PAD + frac * strip_w)}" '
                f'y="{_fmt(base_y + 14)}" font-size="10" text-anchor="middle" '
                f'fill="#333333">{angle:g}&#176;</text>')

    parts.append('</svg>')
    return "\n".join(parts) + "\n"
