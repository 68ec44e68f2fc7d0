"""Standalone SVG plot of V(x) with energy levels drawn across the well."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from xml.sax.saxutils import escape, quoteattr

import numpy as np

from .errors import DomainError
from .operators import OscillatorParams

ROLE_COLORS = {"computed": "#CC0000", "wkb": "#888888"}
CURVE_SAMPLES = 801

MARGIN_LEFT, MARGIN_RIGHT, MARGIN_TOP, MARGIN_BOTTOM = 70, 20, 30, 60


@dataclass(frozen=True)
class LevelSet:
    label: str
    role: str
    energies: tuple[float, ...]
    color: str | None = None

    @property
    def stroke(self) -> str:
        return self.color or ROLE_COLORS.get(self.role, "#000000")


@dataclass(frozen=True)
class PlotSpec:
    """What to draw. ``x_max``/``y_max`` of None pick ranges that hold every level."""

    level_sets: tuple[LevelSet, ...]
    potential: OscillatorParams = field(default_factory=OscillatorParams)
    x_max: float | None = None
    y_max: float | None = None
    width: int = 800
    height: int = 1000
    full_width: bool = False


def turning_point(params: OscillatorParams, e: float) -> float:
    """Outer classical turning point: largest x >= 0 with V(x) = e."""
    k, lam = params.k, params.lam
    if lam == 0:
        u = 2 * e / k
    else:
        # lam/4 u^2 + k/2 u - e = 0 in u = x^2
        u = (math.sqrt(k * k / 4 + lam * e) - k / 2) / (lam / 2)
    return math.sqrt(max(u, 0.0))


def _nice_step(span: float, target: int = 8) -> float:
    raw = span / target
    mag = 10 ** math.floor(math.log10(raw))
    for m in (1, 2, 5, 10):
        if m * mag >= raw:
            return m * mag
    return 10 * mag


def _ticks(lo: float, hi: float) -> list[float]:
    step = _nice_step(hi - lo)
    first = math.ceil(lo / step - 1e-9)
    out = []
    i = first
    while i * step <= hi + 1e-9 * step:
        out.append(i * step)
        i += 1
    return out


def _fmt(v: float) -> str:
    return f"{v:.2f}"


def _tick_label(v: float) -> str:
    return f"{v:g}" if abs(v) > 1e-12 else "0"


def render_levels_svg(spec: PlotSpec) -> str:
    if not spec.level_sets or any(not s.energies for s in spec.level_sets):
        raise DomainError("nothing to plot: every level set needs at least one energy")
    if spec.width < MARGIN_LEFT + MARGIN_RIGHT + 10 or spec.height < MARGIN_TOP + MARGIN_BOTTOM + 10:
        raise DomainError(f"plot size {spec.width}x{spec.height} is too small")
    params = spec.potential
    energies = [e for s in spec.level_sets for e in s.energies]
    e_max = max(energies)
    if min(energies) < 0 and params.k >= 0:
        raise DomainError("negative level below the bottom of the potential")

    x_max = spec.x_max
    if x_max is None:
        x_max = 1.1 * max(turning_point(params, e) for e in energies)
    y_max = spec.y_max if spec.y_max is not None else 1.1 * e_max
    y_min = min(0.0, min(float(params.potential(x_max * t)) for t in np.linspace(0, 1, 101)))
    if not x_max > 0:
        raise DomainError(f"x range must be positive, got {x_max}")
    if not (y_min <= min(energies) and e_max <= y_max):
        raise DomainError("levels fall outside the plotted energy range")

    plot_w = spec.width - MARGIN_LEFT - MARGIN_RIGHT
    plot_h = spec.height - MARGIN_TOP - MARGIN_BOTTOM

    def px(x):
        return MARGIN_LEFT + (x + x_max) / (2 * x_max) * plot_w

    def py(y):
        return MARGIN_TOP + (y_max - y) / (y_max - y_min) * plot_h

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{spec.width}" height="{spec.height}" '
        f'viewBox="0 0 {spec.width} {spec.height}">',
        "<defs>",
        f'<clipPath id="plot-area"><rect x="{MARGIN_LEFT}" y="{MARGIN_TOP}" '
        f'width="{plot_w}" height="{plot_h}"/></clipPath>',
        "</defs>",
        f'<rect x="0" y="0" width="{spec.width}" height="{spec.height}" fill="#FFFFFF"/>',
    ]

    # axes, ticks and labels
    out.append('<g class="axes" stroke="#000000" stroke-width="1" fill="none">')
    out.append(f'<rect x="{MARGIN_LEFT}" y="{MARGIN_TOP}" width="{plot_w}" height="{plot_h}"/>')
    for t in _ticks(-x_max, x_max):
        out.append(f'<line x1="{_fmt(px(t))}" y1="{_fmt(py(y_min))}" x2="{_fmt(px(t))}" y2="{_fmt(py(y_min) + 6)}"/>')
    for t in _ticks(y_min, y_max):
        out.append(f'<line x1="{MARGIN_LEFT - 6}" y1="{_fmt(py(t))}" x2="{MARGIN_LEFT}" y2="{_fmt(py(t))}"/>')
    out.append("</g>")
    out.append('<g class="tick-labels" font-family="sans-serif" font-size="14" fill="#000000">')
    for t in _ticks(-x_max, x_max):
        out.append(f'<text x="{_fmt(px(t))}" y="{_fmt(py(y_min) + 22)}" text-anchor="middle">{_tick_label(t)}</text>')
    for t in _ticks(y_min, y_max):
        out.append(f'<text x="{MARGIN_LEFT - 10}" y="{_fmt(py(t) + 5)}" text-anchor="end">{_tick_label(t)}</text>')
    out.append(
        f'<text x="{_fmt(MARGIN_LEFT + plot_w / 2)}" y="{spec.height - 15}" text-anchor="middle" '
        'font-style="italic">x</text>'
    )
    out.append(
        f'<text x="20" y="{_fmt(MARGIN_TOP + plot_h / 2)}" text-anchor="middle" font-style="italic" '
        f'transform="rotate(-90 20 {_fmt(MARGIN_TOP + plot_h / 2)})">V(x)</text>'
    )
    out.append("</g>")

    out.append('<g clip-path="url(#plot-area)">')
    xs = np.linspace(-x_max, x_max, CURVE_SAMPLES)
    pts = " ".join(f"{_fmt(px(x))},{_fmt(py(float(v)))}" for x, v in zip(xs, params.potential(xs)))
    out.append(f'<polyline class="potential" points="{pts}" fill="none" stroke="#1F3F99" stroke-width="2"/>')
    # first set ends up on top
    for level_set in reversed(spec.level_sets):
        out.append(f'<g class="level-set" data-label={quoteattr(level_set.label)}>')
        for e in level_set.energies:
            if spec.full_width:
                half = x_max
            else:
                half = min(turning_point(params, e), x_max)
            out.append(
                f'<line class={quoteattr("level " + level_set.role)} x1="{_fmt(px(-half))}" y1="{_fmt(py(e))}" '
                f'x2="{_fmt(px(half))}" y2="{_fmt(py(e))}" stroke={quoteattr(level_set.stroke)} stroke-width="1.5"/>'
            )
        out.append("</g>")
    out.append("</g>")

    # legend, top centre where the well is widest open
    out.append('<g class="legend" font-family="sans-serif" font-size="14">')
    left = MARGIN_LEFT + plot_w // 2 - 70
    for i, level_set in enumerate(spec.level_sets):
        y = MARGIN_TOP + 20 + 20 * i
        out.append(
            f'<line x1="{left}" y1="{y}" x2="{left + 30}" y2="{y}" '
            f'stroke={quoteattr(level_set.stroke)} stroke-width="2"/>'
        )
        out.append(f'<text x="{left + 38}" y="{y + 5}">{escape(level_set.label)}</text>')
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
