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
confusion.py
"""
from dataclasses import dataclass
import numpy as np
from ..errors import ShapeMismatch


@dataclass
class ConfusionMatrix:
    """C x C pixel counts, rows ground truth, columns prediction"""

    counts: np.ndarray

    @classmethod
    def zeros(cls, n_classes: int) -> "ConfusionMatrix":
        """Empty matrix over ``n_classes`` classes"""
        if n_classes < 1:
            raise ValueError(f"Invalid number of classes: {n_classes}")
        return cls(counts=np.zeros((n_classes, n_classes), dtype=np.int64))

    @property
    def n_classes(self) -> int:
        """Number of classes"""
        return self.counts.shape[0]

    @property
    def total(self) -> int:
        """Number of evaluated pixels"""
        return int(self.counts.sum())

    def merge(self, other: "ConfusionMatrix") -> "ConfusionMatrix":
        """Sum of two matrices over the same classes"""
        if other.n_classes != self.n_classes:
            raise ShapeMismatch(
                f"Cannot merge {self.n_classes} and {other.n_classes} class matrices"
            )
        return ConfusionMatrix(counts=self.counts + other.counts)

    def __add__(self, other: "ConfusionMatrix") -> "ConfusionMatrix":
        return self.merge(other)


def accumulate_confusion(
    pred: np.ndarray, gt: np.ndarray, cm: ConfusionMatrix
) -> ConfusionMatrix:
    """``cm`` plus one count per pixel at [gt, pred]"""
    if pred.shape != gt.shape:
        raise ShapeMismatch(f"prediction {pred.shape} and truth {gt.shape} differ")

    if pred.size == 0:
        return ConfusionMatrix(counts=cm.counts.copy())

    n_classes = cm.n_classes
    if int(pred.max()) >= n_classes or int(gt.max()) >= n_classes:
        raise ShapeMismatch(f"Labels exceed the {n_classes} classes of the matrix")

    flat = n_classes * gt.reshape(-1).astype(np.int64) + pred.reshape(-1)
    counts = np.bincount(flat.astype(np.int64), minlength=n_classes**2)
    return ConfusionMatrix(counts=cm.counts + counts.reshape(n_classes, n_classes))
