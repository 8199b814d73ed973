from typing import Optional

from app.config import get_settings
from app.models.lattice import LatticePath

FOLD_COLOR = "black"
LEFT_BOUNDARY_COLOR = "red"
RIGHT_BOUNDARY_COLOR = "blue"


class SvgRenderer:
    """Write lattice paths as SVG 1.1 polylines.

    Coordinates are the doubled-integer vertices times ``scale``, with the y axis
    flipped so north points up. Output depends only on the inputs.
    """

    MARGIN = 2

    def __init__(self, scale: Optional[int] = None, rounded: bool = False):
        self.scale = scale if scale is not None else get_settings().svg_scale
        if self.scale <= 0:
            raise ValueError("scale must be positive")
        self.rounded = rounded

    def render(self, layers: list[tuple[LatticePath, str]]) -> str:
        if not layers:
            raise ValueError("nothing to render")
        xs = [p.x for path, _ in layers for p in path.vertices]
        ys = [p.y for path, _ in layers for p in path.vertices]
        min_x, max_y = min(xs) - self.MARGIN, max(ys) + self.MARGIN
        width = (max(xs) - min(xs) + 2 * self.MARGIN) * self.scale
        height = (max(ys) - min(ys) + 2 * self.MARGIN) * self.scale
        join = "round" if self.rounded else "miter"
        cap = "round" if self.rounded else "butt"

        lines = [
            '<?xml version="1.0" encoding="UTF-8"?>',
            '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
            f'width="{width}" height="{height}" viewBox="0 0 {width} {height}">',
        ]
        for path, color in layers:
            points = " ".join(
                f"{(p.x - min_x) * self.scale},{(max_y - p.y) * self.scale}"
                for p in path.vertices
            )
            lines.append(
                f'  <polyline fill="none" stroke="{color}" stroke-width="1" '
                f'stroke-linejoin="{join}" stroke-linecap="{cap}" '
                f'points="{points}"/>'
            )
        lines.append("</svg>")
        return "\n".join(lines) + "\n"
