# app/lib/svg_plot.py
"""
Deterministic SVG line charts: one <polyline> per series, sample index
on x, y autoscaled to the data range with a 5% margin.
"""

import logging
import xml.etree.ElementTree as ET
from pathlib import Path
from typing import List, Sequence, Tuple, Union

import numpy as np

from app.core.exception import EmptySeries, IoError
from app.schemas.signal_schemas import as_signal

logger = logging.getLogger("fasthaar.io")

PathLike = Union[str, Path]
Series = Tuple[str, Sequence[float]]

WIDTH = 800
HEIGHT = 450
MARGIN_LEFT = 80
MARGIN_RIGHT = 30
MARGIN_TOP = 30
MARGIN_BOTTOM = 60
Y_MARGIN_FRACTION = 0.05
PALETTE = ["#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b"]


def _fmt(value: float) -> str:
    return f"{value:.3f}"


def _y_range(arrays: List[np.ndarray]) -> Tuple[float, float]:
    lo = min(float(a.min()) for a in arrays)
    hi = max(float(a.max()) for a in arrays)
    span = hi - lo
    pad = span * Y_MARGIN_FRACTION if span > 0 else max(abs(hi), 1.0) * Y_MARGIN_FRACTION
    return lo - pad, hi + pad


def render_svg(
    series: List[Series],
    x_label: str = "sample index",
    y_label: str = "value",
    title: str = "",
) -> str:
    if not series:
        raise EmptySeries("nothing to plot: no series given")
    arrays = [as_signal(values) for _, values in series]
    for (label, _), arr in zip(series, arrays):
        if arr.size == 0:
            raise EmptySeries(f"series {label!r} has no samples")

    plot_w = WIDTH - MARGIN_LEFT - MARGIN_RIGHT
    plot_h = HEIGHT - MARGIN_TOP - MARGIN_BOTTOM
    x_max = max(max(a.size for a in arrays) - 1, 1)
    y_lo, y_hi = _y_range(arrays)

    def px(i: float) -> float:
        return MARGIN_LEFT + plot_w * i / x_max

    def py(v: float) -> float:
        return MARGIN_TOP + plot_h * (y_hi - v) / (y_hi - y_lo)

    svg = ET.Element(
        "svg",
        {
            "xmlns": "http://www.w3.org/2000/svg",
            "width": str(WIDTH),
            "height": str(HEIGHT),
            "viewBox": f"0 0 {WIDTH} {HEIGHT}",
            "font-family": "sans-serif",
            "font-size": "12",
        },
    )
    ET.SubElement(svg, "rect", {"x": "0", "y": "0", "width": str(WIDTH), "height": str(HEIGHT), "fill": "white"})
    if title:
        ET.SubElement(svg, "text", {"x": _fmt(WIDTH / 2), "y": "18", "text-anchor": "middle"}).text = title

    # axes
    x0, y0 = MARGIN_LEFT, MARGIN_TOP + plot_h
    ET.SubElement(svg, "line", {"x1": str(x0), "y1": str(y0), "x2": str(x0 + plot_w), "y2": str(y0), "stroke": "black"})
    ET.SubElement(svg, "line", {"x1": str(x0), "y1": str(MARGIN_TOP), "x2": str(x0), "y2": str(y0), "stroke": "black"})
    ET.SubElement(svg, "text", {"x": _fmt(x0 + plot_w / 2), "y": str(HEIGHT - 15), "text-anchor": "middle"}).text = x_label
    ET.SubElement(
        svg,
        "text",
        {"x": "20", "y": _fmt(MARGIN_TOP + plot_h / 2), "text-anchor": "middle",
         "transform": f"rotate(-90 20 {_fmt(MARGIN_TOP + plot_h / 2)})"},
    ).text = y_label

    # tick labels at the ends of both axes
    for value in (y_lo, y_hi):
        ET.SubElement(svg, "text", {"x": str(x0 - 6), "y": _fmt(py(value) + 4), "text-anchor": "end"}).text = f"{value:.4g}"
    for index in (0, x_max):
        ET.SubElement(svg, "text", {"x": _fmt(px(index)), "y": str(y0 + 18), "text-anchor": "middle"}).text = str(index)

    for k, ((label, _), arr) in enumerate(zip(series, arrays)):
        color = PALETTE[k % len(PALETTE)]
        points = " ".join(f"{_fmt(px(i))},{_fmt(py(v))}" for i, v in enumerate(arr.tolist()))
        ET.SubElement(svg, "polyline", {"fill": "none", "stroke": color, "stroke-width": "1", "points": points})

        # legend entry
        ly = MARGIN_TOP + 10 + 16 * k
        lx = x0 + plot_w - 160
        ET.SubElement(svg, "line", {"x1": str(lx), "y1": str(ly), "x2": str(lx + 20), "y2": str(ly), "stroke": color, "stroke-width": "2"})
        ET.SubElement(svg, "text", {"x": str(lx + 26), "y": str(ly + 4)}).text = label

    return ET.tostring(svg, encoding="unicode") + "\n"


def emit_svg_plot(series: List[Series], path: PathLike, **labels: str) -> None:
    body = render_svg(series, **labels)
    path = Path(path)
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(body)
    except OSError as exc:
        raise IoError(f"cannot write {path}: {exc}") from exc
    logger.info("📈 wrote %d-series plot to %s", len(series), path)
