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
morphology.py

Square structuring element of side 2r + 1. Pixels outside the map
do not take part (OpenCV default border).
"""
from dataclasses import dataclass
import cv2
import numpy as np
from ..constants import BACKGROUND_CLASS


def _kernel(radius: int) -> np.ndarray:
    return np.ones((2 * radius + 1, 2 * radius + 1), dtype=np.uint8)


def apply_dilation(labels: np.ndarray, class_id: int, radius: int) -> np.ndarray:
    """Grow the class over its neighbours"""
    mask = (labels == class_id).astype(np.uint8)
    if radius <= 0 or not mask.any():
        return labels.copy()

    grown = cv2.dilate(mask, _kernel(radius)).astype(bool)
    out = labels.copy()
    out[grown] = class_id
    return out


def apply_erosion(labels: np.ndarray, class_id: int, radius: int) -> np.ndarray:
    """Shrink the class; removed pixels become background"""
    mask = (labels == class_id).astype(np.uint8)
    if radius <= 0 or not mask.any():
        return labels.copy()

    kept = cv2.erode(mask, _kernel(radius)).astype(bool)
    out = labels.copy()
    out[mask.astype(bool) & ~kept] = BACKGROUND_CLASS
    return out


@dataclass(frozen=True)
class DilationNoise:
    """Dilation by a fixed radius"""

    radius: int

    def apply(self, labels: np.ndarray, class_id: int) -> np.ndarray:
        """Dilate ``class_id`` in ``labels``"""
        return apply_dilation(labels, class_id, self.radius)

    def to_dict(self) -> dict:
        """Serializable form"""
        return {"type": "dilation", "radius": self.radius}


@dataclass(frozen=True)
class ErosionNoise:
    """Erosion by a fixed radius"""

    radius: int

    def apply(self, labels: np.ndarray, class_id: int) -> np.ndarray:
        """Erode ``class_id`` in ``labels``"""
        return apply_erosion(labels, class_id, self.radius)

    def to_dict(self) -> dict:
        """Serializable form"""
        return {"type": "erosion", "radius": self.radius}
