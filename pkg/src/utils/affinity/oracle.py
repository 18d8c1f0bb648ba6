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
oracle.py

Pairwise (hw x hw) path: class-match masks, cosine similarity
matrix and the affinity computed straight from them. Quadratic in
the number of pixels, meant for tests and debugging only.
"""
from dataclasses import dataclass
import numpy as np
from ..constants import POSITIVE_SENTINEL, NEGATIVE_SENTINEL
from ..errors import ShapeMismatch
from .features import normalize_features, check_feature_map, check_affinity_inputs
from .affinity_pair import AffinityPair


@dataclass
class ClassMatchMasks:
    """m_p(i, j) = 1 when pixel i and reference pixel j share a class"""

    m_p: np.ndarray
    m_n: np.ndarray


def class_match_masks(y_t: np.ndarray, y_prev: np.ndarray) -> ClassMatchMasks:
    """Positive and negative label maps between two frames"""
    if y_t.shape != y_prev.shape:
        raise ShapeMismatch(f"Label maps differ: {y_t.shape} vs {y_prev.shape}")

    m_p = (y_t.reshape(-1, 1) == y_prev.reshape(1, -1)).astype(np.uint8)
    return ClassMatchMasks(m_p=m_p, m_n=1 - m_p)


def similarity_matrix(f_t: np.ndarray, f_prev: np.ndarray) -> np.ndarray:
    """Cosine similarity of every pixel pair"""
    check_feature_map(f_t)
    check_feature_map(f_prev)
    if f_t.shape != f_prev.shape:
        raise ShapeMismatch(f"Feature maps differ: {f_t.shape} vs {f_prev.shape}")

    channels = f_t.shape[-1]
    u = normalize_features(f_t).reshape(-1, channels)
    v = normalize_features(f_prev).reshape(-1, channels)
    return u @ v.T


def _masked_mean(s: np.ndarray, mask: np.ndarray, sentinel: float):
    count = mask.sum(axis=1)
    total = (s * mask).sum(axis=1)
    mean = np.full(count.shape, sentinel, dtype=np.float64)
    np.divide(total, count, out=mean, where=count > 0)
    return mean, count > 0


def affinity_bruteforce(
    f_t: np.ndarray, f_prev: np.ndarray, y_t: np.ndarray, y_prev: np.ndarray
) -> AffinityPair:
    """Average similarity to same-class and other-class reference pixels"""
    check_affinity_inputs(f_t, f_prev, y_t, y_prev)

    masks = class_match_masks(y_t, y_prev)
    s = similarity_matrix(f_t, f_prev)
    a_p, defined_p = _masked_mean(s, masks.m_p, POSITIVE_SENTINEL)
    a_n, defined_n = _masked_mean(s, masks.m_n, NEGATIVE_SENTINEL)

    shape = y_t.shape
    return AffinityPair(
        a_p=a_p.reshape(shape),
        a_n=a_n.reshape(shape),
        defined_p=defined_p.reshape(shape),
        defined_n=defined_n.reshape(shape),
    )
