"""
Self-contained SVG 1.1 line charts.

The chart is assembled as text, one element per line: frame, axis ticks and
labels, one polyline per series and a legend in the upper left corner.
Points with non-finite values are left out of their polyline.
"""

from __future__ import annotations

from collections.abc import Sequence
import math
from xml.sax.saxutils import escape

WIDTH = 720
HEIGHT = 450
MARGIN_LEFT = 80
MARGIN_RIGHT = 30
MARGIN_TOP = 40
MARGIN_BOTTOM = 60
TICKS = 5

PALETTE = ("#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b", "#17becf", "#7f7f7f")


def _bounds(values: Sequence[float]) -> tuple[float, float]:
    finite = [value for value in values if math.isfinite(value)]
    if not finite:
        return 0.0, 1.0
    low, high = min(finite), max(finite)
    if low == high:
        pad = abs(low) * 0.05 or 1.0
        return low - pad, high + pad
    return low, high


class SvgChart:
    """Builder for a single-panel line chart."""

    def __init__(self, title: str, x_label: str, y_label: str) -> None:
        """Initialize an empty chart."""
        self.title = title
        self.x_label = x_label
        self.y_label = y_label
        self._series: list[tuple[str, Sequence[float], Sequence[float]]] = []

    def add_series(self, name: str, xs: Sequence[float], ys: Sequence[float]) -> None:
        """Add a named series of points."""
        self._series.append((name, xs, ys))

    def _scale(self) -> tuple[tuple[float, float], tuple[float, float]]:
        xs = [x for _, series_x, _ in self._series for x in series_x]
        ys = [y for _, _, series_y in self._series for y in series_y]
        return _bounds(xs), _bounds(ys)

    def render(self) -> str:
        """Return the chart as an SVG 1.1 document."""
        (x_low, x_high), (y_low, y_high) = self._scale()
        plot_width = WIDTH - MARGIN_LEFT - MARGIN_RIGHT
        plot_height = HEIGHT - MARGIN_TOP - MARGIN_BOTTOM

        def px(x: float) -> float:
            return MARGIN_LEFT + (x - x_low) / (x_high - x_low) * plot_width

        def py(y: float) -> float:
            return MARGIN_TOP + (y_high - y) / (y_high - y_low) * plot_height

        svg = [
            '<?xml version="1.0" standalone="no"?>',
            '<!DOCTYPE svg PUBLIC "-//W3C//DTD SVG 1.1//EN" "http://www.w3.org/Graphics/SVG/1.1/DTD/svg11.dtd">',
            f'<svg version="1.1" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}" '
            'xmlns="http://www.w3.org/2000/svg">',
            f'<rect x="0" y="0" width="{WIDTH}" height="{HEIGHT}" fill="white"/>',
            f'<text x="{WIDTH / 2:.1f}" y="{MARGIN_TOP / 2 + 5:.1f}" text-anchor="middle" '
            f'font-family="sans-serif" font-size="15">{escape(self.title)}</text>',
            f'<rect x="{MARGIN_LEFT}" y="{MARGIN_TOP}" width="{plot_width}" height="{plot_height}" '
            'fill="none" stroke="black"/>',
        ]

        for index in range(TICKS + 1):
            x = x_low + (x_high - x_low) * index / TICKS
            y = y_low + (y_high - y_low) * index / TICKS
            svg.append(
                f'<line x1="{px(x):.2f}" y1="{HEIGHT - MARGIN_BOTTOM}" x2="{px(x):.2f}" '
                f'y2="{HEIGHT - MARGIN_BOTTOM + 5}" stroke="black"/>'
            )
            svg.append(
                f'<text x="{px(x):.2f}" y="{HEIGHT - MARGIN_BOTTOM + 20}" text-anchor="middle" '
                f'font-family="sans-serif" font-size="11">{x:.4g}</text>'
            )
            svg.append(
                f'<line x1="{MARGIN_LEFT - 5}" y1="{py(y):.2f}" x2="{MARGIN_LEFT}" y2="{py(y):.2f}" stroke="black"/>'
            )
            svg.append(
                f'<text x="{MARGIN_LEFT - 8}" y="{py(y) + 4:.2f}" text-anchor="end" '
                f'font-family="sans-serif" font-size="11">{y:.4g}</text>'
            )

        svg.append(
            f'<text x="{MARGIN_LEFT + plot_width / 2:.1f}" y="{HEIGHT - 15}" text-anchor="middle" '
            f'font-family="sans-serif" font-size="13">{escape(self.x_label)}</text>'
        )
        svg.append(
            f'<text x="20" y="{MARGIN_TOP + plot_height / 2:.1f}" text-anchor="middle" font-family="sans-serif" '
            f'font-size="13" transform="rotate(-90 20 {MARGIN_TOP + plot_height / 2:.1f})">'
            f"{escape(self.y_label)}</text>"
        )

        for index, (name, xs, ys) in enumerate(self._series):
            colour = PALETTE[index % len(PALETTE)]
            points = " ".join(
                f"{px(x):.2f},{py(y):.2f}" for x, y in zip(xs, ys, strict=True) if math.isfinite(x) and math.isfinite(y)
            )
            if points:
                svg.append(f'<polyline points="{points}" fill="none" stroke="{colour}" stroke-width="1.5"/>')
            legend_y = MARGIN_TOP + 18 + 16 * index
            svg.append(
                f'<line x1="{MARGIN_LEFT + 10}" y1="{legend_y - 4}" x2="{MARGIN_LEFT + 30}" y2="{legend_y - 4}" '
                f'stroke="{colour}" stroke-width="2"/>'
            )
            svg.append(
                f'<text x="{MARGIN_LEFT + 36}" y="{legend_y}" font-family="sans-serif" '
                f'font-size="11">{escape(name)}</text>'
            )

        svg.append("</svg>")
        return "\n".join(svg) + "\n"
