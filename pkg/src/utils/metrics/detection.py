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
detection.py
"""
import typing
from dataclasses import dataclass
import numpy as np
from ..errors import ShapeMismatch


@dataclass(frozen=True)
class DetectionScores:
    """Agreement of selected noise masks with the true noise maps"""

    selected: int
    true: int
    intersection: int

    @property
    def union(self) -> int:
        """Pixels selected or truly noisy"""
        return self.selected + self.true - self.intersection

    @property
    def precision(self) -> float:
        """1.0 when nothing was selected"""
        return self.intersection / self.selected if self.selected else 1.0

    @property
    def recall(self) -> float:
        """1.0 when nothing is truly noisy"""
        return self.intersection / self.true if self.true else 1.0

    @property
    def f1(self) -> float:
        """Harmonic mean of precision and recall"""
        total = self.precision + self.recall
        return 2 * self.precision * self.recall / total if total else 0.0

    @property
    def overlap_iou(self) -> float:
        """Intersection over union, 1.0 when both are empty"""
        return self.intersection / self.union if self.union else 1.0

    def merge(self, other: "DetectionScores") -> "DetectionScores":
        """Scores over both sets of masks"""
        return DetectionScores(
            selected=self.selected + other.selected,
            true=self.true + other.true,
            intersection=self.intersection + other.intersection,
        )

    def to_dict(self) -> dict[str, float | int]:
        """Serializable form"""
        return {
            "precision": self.precision,
            "recall": self.recall,
            "f1": self.f1,
            "overlap_iou": self.overlap_iou,
            "selected": self.selected,
            "true": self.true,
            "intersection": self.intersection,
        }


def detection_counts(selected: np.ndarray, variance: np.ndarray) -> DetectionScores:
    """Scores of one mask"""
    if selected.shape != variance.shape:
        raise ShapeMismatch(
            f"selected mask {selected.shape} and variance {variance.shape} differ"
        )

    chosen = selected.astype(bool)
    noisy = variance.astype(bool)
    return DetectionScores(
        selected=int(chosen.sum()),
        true=int(noisy.sum()),
        intersection=int((chosen & noisy).sum()),
    )


def detection_metrics(
    selected: typing.Sequence[np.ndarray] | np.ndarray,
    variance: typing.Sequence[np.ndarray] | np.ndarray,
) -> DetectionScores:
    """Scores over a set of aligned masks (or a single pair)"""
    if isinstance(selected, np.ndarray) and isinstance(variance, np.ndarray):
        return detection_counts(selected, variance)

    if len(selected) != len(variance):
        raise ShapeMismatch(f"{len(selected)} selected masks, {len(variance)} maps")

    scores = DetectionScores(selected=0, true=0, intersection=0)
    for chosen, noisy in zip(selected, variance):
        scores = scores.merge(detection_counts(chosen, noisy))
    return scores
