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
affinity_pair.py
"""
from dataclasses import dataclass
import numpy as np
from .resample import upsample_affinity


@dataclass
class AffinityPair:
    """
    Positive and negative affinity of every pixel, with the masks
    telling which entries had reference pixels to average over.
    Undefined entries hold the sentinels (+1 for a_p, -1 for a_n).
    """

    a_p: np.ndarray
    a_n: np.ndarray
    defined_p: np.ndarray
    defined_n: np.ndarray

    @property
    def shape(self) -> tuple[int, int]:
        """Spatial size of the maps"""
        return self.a_p.shape

    def upsample(self, height: int, width: int) -> "AffinityPair":
        """Nearest-neighbour expansion of the four maps"""
        return AffinityPair(
            a_p=upsample_affinity(self.a_p, height, width),
            a_n=upsample_affinity(self.a_n, height, width),
            defined_p=upsample_affinity(self.defined_p, height, width),
            defined_n=upsample_affinity(self.defined_n, height, width),
        )

    def defined_counts(self) -> tuple[int, int]:
        """Number of defined positive and negative entries"""
        return int(self.defined_p.sum()), int(self.defined_n.sum())

    def is_informative(self) -> bool:
        """True when both sides have at least one defined entry"""
        return bool(self.defined_p.any() and self.defined_n.any())

    def to_tensors(self) -> dict[str, np.ndarray]:
        """Arrays in their storage dtypes, keyed by file suffix"""
        return {
            "a_p": self.a_p.astype(np.float32),
            "a_n": self.a_n.astype(np.float32),
            "defined_p": self.defined_p.astype(np.uint8),
            "defined_n": self.defined_n.astype(np.uint8),
        }


def upsample_pair(pair: AffinityPair, height: int, width: int) -> AffinityPair:
    """Expand ``pair`` to label resolution"""
    return pair.upsample(height, width)
