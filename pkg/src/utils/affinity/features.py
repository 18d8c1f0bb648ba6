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
features.py
"""
import numpy as np
from ..constants import NORM_EPSILON
from ..errors import ShapeMismatch


def check_feature_map(features: np.ndarray):
    """A feature map is h x w x C_f with every dimension >= 1"""
    if features.ndim != 3 or min(features.shape) < 1:
        raise ShapeMismatch(f"Feature map must be h x w x C_f, got {features.shape}")


def normalize_features(features: np.ndarray) -> np.ndarray:
    """
    Scale every pixel vector to unit L2 norm. Exact-zero vectors
    stay zero so they add nothing to similarities.
    """
    values = np.asarray(features, dtype=np.float64)
    norms = np.linalg.norm(values, axis=-1, keepdims=True)
    return np.where(norms > 0.0, values / np.maximum(norms, NORM_EPSILON), 0.0)


def check_affinity_inputs(
    f_t: np.ndarray, f_prev: np.ndarray, y_t: np.ndarray, y_prev: np.ndarray
):
    """Both feature maps h x w x C_f, both label maps h x w"""
    check_feature_map(f_t)
    check_feature_map(f_prev)

    if f_t.shape != f_prev.shape:
        raise ShapeMismatch(f"Feature maps differ: {f_t.shape} vs {f_prev.shape}")

    if y_t.shape != f_t.shape[:2] or y_prev.shape != f_prev.shape[:2]:
        raise ShapeMismatch(
            f"Label maps {y_t.shape}, {y_prev.shape} do not match "
            + f"feature size {f_t.shape[:2]}"
        )
