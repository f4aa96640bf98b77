"""Standalone SVG rendering for PlotSpec values.

The output is a pure function of the spec: fixed canvas, fixed fonts, no
timestamps, and every coordinate formatted to two decimals, so equal specs
always produce byte-identical files.
"""

from xml.sax.saxutils import escape

WIDTH = 800
HEIGHT = 400
MARGIN_LEFT = 64
MARGIN_RIGHT = 24
MARGIN_TOP = 48
MARGIN_BOTTOM = 56
TICKS = 5

_FONT = 'font-family="DejaVu Sans, sans-serif"'
_TEXT = f'{_FONT} font-size="12"'
_PALETTE = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b")


def _fmt(value: float) -> str:
    return f"{value:.2f}"


def _domain(values) -> tuple:
    if not values:
        return 0.0, 1.0
    lo, hi = min(values), max(values)
    if lo == hi:
        return lo - 1.0, hi + 1.0
    return lo, hi


def _band_fill(score: float) -> str:
    red = round(210 * (1.0 - score)) + 45
    green = round(190 * score) + 55
    return f"rgb({red},{green},80)"


def _category_colors(markers) -> dict:
    colors = {}
    for marker in markers:
        if marker.category not in colors:
            colors[marker.category] = _PALETTE[len(colors) % len(_PALETTE)]
    return colors


def render_svg(spec) -> str:
    plot_w = WIDTH - MARGIN_LEFT - MARGIN_RIGHT
    plot_h = HEIGHT - MARGIN_TOP - MARGIN_BOTTOM
    x_lo, x_hi = _domain([t for t, _ in spec.series] + [m.t for m in spec.markers])
    y_lo, y_hi = _domain([v for _, v in spec.series])

    def px(t: float) -> float:
        return MARGIN_LEFT + (t - x_lo) / (x_hi - x_lo) * plot_w

    def py(v: float) -> float:
        return MARGIN_TOP + plot_h - (v - y_lo) / (y_hi - y_lo) * plot_h

    bottom = MARGIN_TOP + plot_h
    right = MARGIN_LEFT + plot_w
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" '
        f'viewBox="0 0 {WIDTH} {HEIGHT}">',
        f'<rect x="0" y="0" width="{WIDTH}" height="{HEIGHT}" fill="#ffffff"/>',
        f'<text x="{WIDTH // 2}" y="24" {_FONT} font-size="16" '
        f'text-anchor="middle">{escape(spec.title)}</text>',
    ]

    for i, band in enumerate(spec.color_bands or ()):
        from_t = spec.series[band.from_index][0]
        if i + 1 < len(spec.color_bands):
            to_t = spec.series[spec.color_bands[i + 1].from_index][0]
        else:
            to_t = x_hi
        parts.append(
            f'<rect x="{_fmt(px(from_t))}" y="{MARGIN_TOP}" '
            f'width="{_fmt(px(to_t) - px(from_t))}" height="{plot_h}" '
            f'fill="{_band_fill(band.score_value)}" fill-opacity="0.30"/>'
        )

    parts.append(
        f'<line x1="{MARGIN_LEFT}" y1="{bottom}" x2="{right}" y2="{bottom}" '
        f'stroke="#333333" stroke-width="1"/>'
    )
    parts.append(
        f'<line x1="{MARGIN_LEFT}" y1="{MARGIN_TOP}" x2="{MARGIN_LEFT}" y2="{bottom}" '
        f'stroke="#333333" stroke-width="1"/>'
    )
    for i in range(TICKS):
        frac = i / (TICKS - 1)
        tx = x_lo + frac * (x_hi - x_lo)
        x = px(tx)
        parts.append(
            f'<line x1="{_fmt(x)}" y1="{bottom}" x2="{_fmt(x)}" y2="{bottom + 4}" '
            f'stroke="#333333" stroke-width="1"/>'
        )
        parts.append(
            f'<text x="{_fmt(x)}" y="{bottom + 18}" {_TEXT} '
            f'text-anchor="middle">{_fmt(tx)}</text>'
        )
        ty = y_lo + frac * (y_hi - y_lo)
        y = py(ty)
        parts.append(
            f'<line x1="{MARGIN_LEFT - 4}" y1="{_fmt(y)}" x2="{MARGIN_LEFT}" y2="{_fmt(y)}" '
            f'stroke="#333333" stroke-width="1"/>'
        )
        parts.append(
            f'<text x="{MARGIN_LEFT - 8}" y="{_fmt(y + 4)}" {_TEXT} '
            f'text-anchor="end">{_fmt(ty)}</text>'
        )

    x_label = spec.x_axis.label + (f" ({spec.x_axis.unit})" if spec.x_axis.unit else "")
    y_label = spec.y_axis.label + (f" ({spec.y_axis.unit})" if spec.y_axis.unit else "")
    parts.append(
        f'<text x="{MARGIN_LEFT + plot_w // 2}" y="{HEIGHT - 12}" {_TEXT} '
        f'text-anchor="middle">{escape(x_label)}</text>'
    )
    parts.append(
        f'<text x="16" y="{MARGIN_TOP + plot_h // 2}" {_TEXT} text-anchor="middle" '
        f'transform="rotate(-90 16 {MARGIN_TOP + plot_h // 2})">{escape(y_label)}</text>'
    )

    colors = _category_colors(spec.markers)
    for marker in spec.markers:
        x = px(marker.t)
        color = colors[marker.category]
        parts.append(
            f'<line x1="{_fmt(x)}" y1="{MARGIN_TOP}" x2="{_fmt(x)}" y2="{bottom}" '
            f'stroke="{color}" stroke-width="1" stroke-dasharray="3,3"/>'
        )
        parts.append(
            f'<text x="{_fmt(x + 3)}" y="{MARGIN_TOP + 10}" {_FONT} font-size="9" '
            f'fill="{color}" transform="rotate(45 {_fmt(x + 3)} {MARGIN_TOP + 10})">'
            f"{escape(marker.label)}</text>"
        )

    if spec.series:
        points = " ".join(f"{_fmt(px(t))},{_fmt(py(v))}" for t, v in spec.series)
        parts.append(
            f'<polyline points="{points}" fill="none" stroke="#1a1a1a" stroke-width="1.5"/>'
        )
        point_fill = {}
        for band in spec.color_bands or ():
            for index in range(band.from_index, band.to_index + 1):
                point_fill[index] = _band_fill(band.score_value)
        for i, (t, v) in enumerate(spec.series):
            fill = point_fill.get(i, "#1a1a1a")
            radius = 3 if i in point_fill else 2
            parts.append(
                f'<circle cx="{_fmt(px(t))}" cy="{_fmt(py(v))}" r="{radius}" '
                f'fill="{fill}" stroke="#1a1a1a" stroke-width="0.5"/>'
            )

    for i, (category, color) in enumerate(colors.items()):
        y = MARGIN_TOP + 8 + 16 * i
        parts.append(
            f'<rect x="{right - 140}" y="{y - 8}" width="10" height="10" fill="{color}"/>'
        )
        parts.append(
            f'<text x="{right - 126}" y="{y + 1}" {_FONT} font-size="10">'
            f"{escape(category)}</text>"
        )

    parts.append("</svg>")
    return "\n".join(parts) + "\n"
