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
resample.py

Nearest-neighbour resampling between label resolution (H x W)
and feature resolution (h x w). The same index rule serves both
directions: target cell ``i`` reads source cell
``floor((2i + 1) * src / (2 * dst))``, i.e. the source cell holding
the target cell centre.
"""
import numpy as np
from ..errors import InvalidTargetSize


def nearest_indices(src: int, dst: int) -> np.ndarray:
    """Source index read by each of the ``dst`` target cells"""
    if src < 1 or dst < 1:
        raise InvalidTargetSize(f"Cannot resample {src} cells into {dst}")

    index = ((2 * np.arange(dst, dtype=np.int64) + 1) * src) // (2 * dst)
    return np.minimum(index, src - 1)


def _resample(grid: np.ndarray, height: int, width: int) -> np.ndarray:
    rows = nearest_indices(grid.shape[0], height)
    cols = nearest_indices(grid.shape[1], width)
    return grid[np.ix_(rows, cols)]


def downsample_labels(labels: np.ndarray, height: int, width: int) -> np.ndarray:
    """Shrink an H x W label map to ``height`` x ``width``"""
    if labels.ndim != 2:
        raise InvalidTargetSize(f"Label map must be 2-D, got shape {labels.shape}")

    src_h, src_w = labels.shape
    if not (0 < height <= src_h and 0 < width <= src_w):
        raise InvalidTargetSize(
            f"Cannot downsample {src_h}x{src_w} labels to {height}x{width}"
        )

    return _resample(labels, height, width)


def upsample_affinity(grid: np.ndarray, height: int, width: int) -> np.ndarray:
    """Expand an h x w map (affinity or defined mask) to ``height`` x ``width``"""
    if grid.ndim != 2:
        raise InvalidTargetSize(f"Affinity map must be 2-D, got shape {grid.shape}")

    src_h, src_w = grid.shape
    if src_h == 0 or src_w == 0 or height < src_h or width < src_w:
        raise InvalidTargetSize(
            f"Cannot upsample {src_h}x{src_w} map to {height}x{width}"
        )

    return _resample(grid, height, width)
