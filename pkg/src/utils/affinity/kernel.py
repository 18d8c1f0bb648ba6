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
kernel.py

Affinity without the pairwise matrix. Since the similarity is a dot
product of normalized vectors, the mean over the same-class reference
pixels is the dot product with their mean vector:

    a_p(i) = u_i . S_c / n_c          S_c = sum of v_j with y_prev(j) = c
    a_n(i) = u_i . (S - S_c) / (N - n_c)

Time O(hw * C_f + hw * C), extra space O(C * C_f).
"""
import numpy as np
from ..constants import POSITIVE_SENTINEL, NEGATIVE_SENTINEL
from .features import normalize_features, check_affinity_inputs
from .affinity_pair import AffinityPair


def class_sums(
    v: np.ndarray, labels: np.ndarray, n_classes: int
) -> tuple[np.ndarray, np.ndarray]:
    """Per-class sum of rows of ``v`` and per-class row counts"""
    sums = np.zeros((n_classes, v.shape[1]), dtype=np.float64)
    np.add.at(sums, labels, v)
    counts = np.bincount(labels, minlength=n_classes)
    return sums, counts


def affinity_fast(
    f_t: np.ndarray, f_prev: np.ndarray, y_t: np.ndarray, y_prev: np.ndarray
) -> AffinityPair:
    """Same contract as ``affinity_bruteforce``"""
    check_affinity_inputs(f_t, f_prev, y_t, y_prev)

    channels = f_t.shape[-1]
    u = normalize_features(f_t).reshape(-1, channels)
    v = normalize_features(f_prev).reshape(-1, channels)

    labels_t = y_t.reshape(-1).astype(np.int64)
    labels_prev = y_prev.reshape(-1).astype(np.int64)
    n_classes = int(max(labels_t.max(), labels_prev.max())) + 1

    sums, counts = class_sums(v, labels_prev, n_classes)
    total = v.sum(axis=0)

    same = sums[labels_t]
    n_same = counts[labels_t]
    n_other = labels_prev.size - n_same

    dot_same = np.einsum("ij,ij->i", u, same)
    dot_other = np.einsum("ij,ij->i", u, total - same)

    a_p = np.full(labels_t.shape, POSITIVE_SENTINEL, dtype=np.float64)
    a_n = np.full(labels_t.shape, NEGATIVE_SENTINEL, dtype=np.float64)
    np.divide(dot_same, n_same, out=a_p, where=n_same > 0)
    np.divide(dot_other, n_other, out=a_n, where=n_other > 0)

    shape = y_t.shape
    return AffinityPair(
        a_p=a_p.reshape(shape),
        a_n=a_n.reshape(shape),
        defined_p=(n_same > 0).reshape(shape),
        defined_n=(n_other > 0).reshape(shape),
    )
