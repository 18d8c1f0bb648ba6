# The MIT License (MIT)

# Copyright (c) 2024 Affinity Rectifier contributors

# Permission is hereby granted, free of charge, to any person obtaining a copy
# of this software and associated documentation files (the "Software"), to deal
# in the Software without restriction, including without limitation the rights
# to use, copy, modify, merge, publish, distribute, sublicense, and/or sell
# copies of the Software, and to permit persons to whom the Software is
# furnished to do so, subject to the following conditions:

# The above copyright notice and this permission notice shall be included in
# all copies or substantial portions of the Software.

# THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
# IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
# FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
# AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
# LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING FROM,
# OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS IN
# THE SOFTWARE.
"""
polygon.py

Random star-shaped polygons painted into label maps.

Pixel (row, col) is sampled at the point x = col, y = row. Each
scanline keeps the edges it crosses with the half-open rule
y0 <= y < y1, sorts the crossings, and fills the columns c with
x_a <= c < x_b between consecutive pairs.
"""
import math
from dataclasses import dataclass
import numpy as np
from ..constants import BACKGROUND_CLASS
from .noise_config import PolygonParams


def rasterize_polygon(
    vertices: np.ndarray | list, height: int, width: int
) -> np.ndarray:
    """Boolean ``height`` x ``width`` mask of the pixels inside"""
    filled = np.zeros((height, width), dtype=bool)
    points = np.asarray(vertices, dtype=np.float64).reshape(-1, 2)
    if len(points) < 3:
        return filled

    x0, y0 = points[:, 0], points[:, 1]
    x1, y1 = np.roll(x0, -1), np.roll(y0, -1)

    first = max(0, math.ceil(points[:, 1].min()))
    last = min(height - 1, math.floor(points[:, 1].max()))

    for row in range(first, last + 1):
        crossing = ((y0 <= row) & (row < y1)) | ((y1 <= row) & (row < y0))
        if not crossing.any():
            continue

        xa, ya, xb, yb = x0[crossing], y0[crossing], x1[crossing], y1[crossing]
        nodes = np.sort(xa + (row - ya) * (xb - xa) / (yb - ya))

        for left, right in zip(nodes[0::2], nodes[1::2]):
            start = max(0, math.ceil(left))
            stop = min(width, math.ceil(right))
            if start < stop:
                filled[row, start:stop] = True

    return filled


@dataclass(frozen=True)
class PolygonNoise:
    """A fixed polygon and whether it adds or removes the class"""

    vertices: tuple[tuple[float, float], ...]
    additive: bool

    @classmethod
    def sample(
        cls,
        labels: np.ndarray,
        class_id: int,
        params: PolygonParams,
        rng: np.random.Generator,
    ) -> "PolygonNoise":
        """
        Centre on a random pixel of the class (anywhere when absent),
        angles sorted uniform, radii in [1/4, 1/2] of the extent
        """
        height, width = labels.shape
        extent = params.extent_for(height, width)
        additive = bool(rng.integers(2))
        low, high = params.vertex_range
        n_vertices = int(rng.integers(low, high + 1))

        rows, cols = np.nonzero(labels == class_id)
        if rows.size:
            pick = int(rng.integers(rows.size))
            cx, cy = float(cols[pick]), float(rows[pick])
        else:
            cx = float(rng.uniform(0, width))
            cy = float(rng.uniform(0, height))

        angles = np.sort(rng.uniform(0.0, 2.0 * math.pi, size=n_vertices))
        radii = rng.uniform(0.25, 0.5, size=n_vertices) * extent

        vertices = tuple(
            (cx + radius * math.cos(angle), cy + radius * math.sin(angle))
            for angle, radius in zip(angles, radii)
        )
        return cls(vertices=vertices, additive=additive)

    def apply(self, labels: np.ndarray, class_id: int) -> np.ndarray:
        """Paint the class (additive) or background over the class (subtractive)"""
        inside = rasterize_polygon(self.vertices, *labels.shape)
        out = labels.copy()
        if self.additive:
            out[inside] = class_id
        else:
            out[inside & (labels == class_id)] = BACKGROUND_CLASS
        return out

    def to_dict(self) -> dict:
        """Serializable form"""
        return {
            "type": "polygon",
            "additive": self.additive,
            "vertices": [list(vertex) for vertex in self.vertices],
        }


def apply_polygon_noise(
    labels: np.ndarray,
    class_id: int,
    params: PolygonParams,
    rng: np.random.Generator,
) -> np.ndarray:
    """Add or cut a random polygon of ``class_id``"""
    return PolygonNoise.sample(labels, class_id, params, rng).apply(labels, class_id)
