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
affine.py
"""
from dataclasses import dataclass, asdict
import cv2
import numpy as np
from ..constants import BACKGROUND_CLASS
from .noise_config import AffineParams


@dataclass(frozen=True)
class AffineTransform:
    """
    Rotation (degrees, counter-clockwise) and scale about the class
    mask centroid, followed by a translation in pixels
    """

    tx: float = 0.0
    ty: float = 0.0
    angle: float = 0.0
    scale: float = 1.0

    @classmethod
    def sample(
        cls, params: AffineParams, rng: np.random.Generator
    ) -> "AffineTransform":
        """Uniform draw within ``params`` bounds"""
        return cls(
            tx=float(rng.uniform(-params.max_translate_px, params.max_translate_px)),
            ty=float(rng.uniform(-params.max_translate_px, params.max_translate_px)),
            angle=float(rng.uniform(-params.max_rotate_deg, params.max_rotate_deg)),
            scale=float(rng.uniform(*params.scale_range)),
        )

    def matrix(self, center: tuple[float, float]) -> np.ndarray:
        """2 x 3 forward matrix for a mask centred at ``center`` (x, y)"""
        forward = cv2.getRotationMatrix2D(center, self.angle, self.scale)
        forward[0, 2] += self.tx
        forward[1, 2] += self.ty
        return forward

    def warp_class(self, mask: np.ndarray) -> np.ndarray:
        """Move a binary mask, nearest-neighbour resampled"""
        rows, cols = np.nonzero(mask)
        if rows.size == 0:
            return np.zeros(mask.shape, dtype=bool)

        center = (float(cols.mean()), float(rows.mean()))
        height, width = mask.shape
        moved = cv2.warpAffine(
            mask.astype(np.uint8),
            self.matrix(center),
            (width, height),
            flags=cv2.INTER_NEAREST,
            borderMode=cv2.BORDER_CONSTANT,
            borderValue=0,
        )
        return moved.astype(bool)

    def apply(self, labels: np.ndarray, class_id: int) -> np.ndarray:
        """Vacated pixels become background, destination is overwritten"""
        mask = labels == class_id
        if not mask.any():
            return labels.copy()

        moved = self.warp_class(mask)
        out = labels.copy()
        out[mask] = BACKGROUND_CLASS
        out[moved] = class_id
        return out

    def to_dict(self) -> dict:
        """Serializable form"""
        return {"type": "affine", **asdict(self)}


def apply_affine(
    labels: np.ndarray, class_id: int, params: AffineParams, rng: np.random.Generator
) -> np.ndarray:
    """Move ``class_id`` by a transform sampled within ``params``"""
    return AffineTransform.sample(params, rng).apply(labels, class_id)
