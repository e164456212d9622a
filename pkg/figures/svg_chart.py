"""Static SVG 1.1 line charts: axes, one polyline per series, legend."""
import logging
import math
from pathlib import Path
from typing import Dict, List, Optional, Sequence

from lxml import etree

from figures.tables import replace_atomically

logger = logging.getLogger(__name__)

SVG_NS = 'http://www.w3.org/2000/svg'
DOCTYPE = '<!DOCTYPE svg PUBLIC "-//W3C//DTD SVG 1.1//EN" "http://www.w3.org/Graphics/SVG/1.1/DTD/svg11.dtd">'

WIDTH, HEIGHT = 640, 420
MARGIN_LEFT, MARGIN_RIGHT, MARGIN_TOP, MARGIN_BOTTOM = 70, 160, 40, 50
PALETTE = ('#1f77b4', '#d62728', '#2ca02c', '#ff7f0e', '#9467bd', '#8c564b')


def _element(parent, tag: str, text: Optional[str] = None, **attributes):
    node = etree.SubElement(parent, f'{{{SVG_NS}}}{tag}', {key.replace('_', '-'): str(value)
                                                          for key, value in attributes.items()})
    if text is not None:
        node.text = text
    return node


def _span(values: List[float]):
    low, high = min(values), max(values)
    if low == high:
        pad = abs(low) * 0.05 or 1.0
        return low - pad, high + pad
    return low, high


def render_chart(title: str, x_label: str, xs: Sequence[float],
                 series: Dict[str, Sequence[Optional[float]]]):
    """Build the chart tree; None or non-finite points are left out of their polyline"""
    points = {
        name: [(x, y) for x, y in zip(xs, ys) if y is not None and math.isfinite(y)]
        for name, ys in series.items()
    }
    all_y = [y for pairs in points.values() for _, y in pairs] or [0.0]
    x_low, x_high = _span(list(xs) or [0.0])
    y_low, y_high = _span(all_y)

    plot_width = WIDTH - MARGIN_LEFT - MARGIN_RIGHT
    plot_height = HEIGHT - MARGIN_TOP - MARGIN_BOTTOM

    def to_px(x: float, y: float):
        px = MARGIN_LEFT + (x - x_low) / (x_high - x_low) * plot_width
        py = MARGIN_TOP + (y_high - y) / (y_high - y_low) * plot_height
        return f'{px:.2f},{py:.2f}'

    root = etree.Element(f'{{{SVG_NS}}}svg', nsmap={None: SVG_NS}, version='1.1',
                         width=str(WIDTH), height=str(HEIGHT), viewBox=f'0 0 {WIDTH} {HEIGHT}')
    _element(root, 'rect', x=0, y=0, width=WIDTH, height=HEIGHT, fill='#ffffff')
    _element(root, 'text', title, x=MARGIN_LEFT, y=MARGIN_TOP - 15, font_family='sans-serif', font_size=14)

    axes = _element(root, 'g', stroke='#000000', stroke_width=1)
    bottom = MARGIN_TOP + plot_height
    _element(axes, 'line', x1=MARGIN_LEFT, y1=bottom, x2=MARGIN_LEFT + plot_width, y2=bottom)
    _element(axes, 'line', x1=MARGIN_LEFT, y1=MARGIN_TOP, x2=MARGIN_LEFT, y2=bottom)

    labels = _element(root, 'g', font_family='sans-serif', font_size=11, fill='#333333')
    _element(labels, 'text', f'{x_low:.4g}', x=MARGIN_LEFT, y=bottom + 16)
    _element(labels, 'text', f'{x_high:.4g}', x=MARGIN_LEFT + plot_width - 20, y=bottom + 16)
    _element(labels, 'text', x_label, x=MARGIN_LEFT + plot_width / 2, y=bottom + 36)
    _element(labels, 'text', f'{y_high:.4g}', x=5, y=MARGIN_TOP + 4)
    _element(labels, 'text', f'{y_low:.4g}', x=5, y=bottom)

    legend = _element(root, 'g', font_family='sans-serif', font_size=11)
    for index, (name, pairs) in enumerate(points.items()):
        color = PALETTE[index % len(PALETTE)]
        _element(root, 'polyline', points=' '.join(to_px(x, y) for x, y in pairs),
                 fill='none', stroke=color, stroke_width=1.5)
        row = MARGIN_TOP + 10 + 18 * index
        legend_x = WIDTH - MARGIN_RIGHT + 15
        _element(legend, 'line', x1=legend_x, y1=row, x2=legend_x + 20, y2=row, stroke=color, stroke_width=2)
        _element(legend, 'text', name, x=legend_x + 26, y=row + 4, fill='#000000')
    return root


def write_svg(path: Path, title: str, x_label: str, xs: Sequence[float],
              series: Dict[str, Sequence[Optional[float]]]) -> Path:
    document = etree.tostring(render_chart(title, x_label, xs, series), xml_declaration=True,
                              encoding='UTF-8', pretty_print=True, doctype=DOCTYPE)
    with replace_atomically(path, mode='w') as stream:
        stream.write(document.decode('utf-8'))
    logger.info("Wrote chart %r with %d series to %s", title, len(series), path)
    return Path(path)
