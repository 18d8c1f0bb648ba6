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
loss.py
"""
from dataclasses import dataclass, asdict
import numpy as np
from ..constants import PROBABILITY_FLOOR, PROBABILITY_TOLERANCE, VALID_REDUCTIONS
from ..errors import ShapeMismatch, InvalidPrediction
from .schedule import StageFlags


@dataclass(frozen=True)
class LossBreakdown:
    """Both loss terms and their sum"""

    weighted_ce: float
    corrected_ce: float
    total: float

    def to_dict(self) -> dict[str, float]:
        """Serializable form"""
        return asdict(self)


def check_probabilities(probs: np.ndarray, name: str = "prediction"):
    """H x W x C, non-negative, every pixel summing to one"""
    if probs.ndim != 3 or probs.shape[-1] < 1:
        raise ShapeMismatch(f"{name} must be H x W x C, got {probs.shape}")

    if (probs < 0).any():
        raise InvalidPrediction(f"{name} holds negative probabilities")

    sums = probs.sum(axis=-1, dtype=np.float64)
    if probs.size and np.abs(sums - 1.0).max() > PROBABILITY_TOLERANCE:
        raise InvalidPrediction(f"{name} probabilities do not sum to 1")


def cross_entropy(
    probs: np.ndarray, labels: np.ndarray, reduction: str = "sum"
) -> float:
    """
    Sum over pixels of -log p(i, y(i)), probabilities clamped at
    1e-12. ``reduction="mean"`` divides by the pixel count.
    """
    if reduction not in VALID_REDUCTIONS:
        raise ValueError(f"Invalid reduction: {reduction}")

    if probs.ndim != 3 or probs.shape[:2] != labels.shape:
        raise ShapeMismatch(
            f"predictions {probs.shape} do not align with labels {labels.shape}"
        )

    if labels.size == 0:
        return 0.0

    if int(labels.max()) >= probs.shape[-1]:
        raise ShapeMismatch(
            f"label {int(labels.max())} out of {probs.shape[-1]} predicted classes"
        )

    picked = np.take_along_axis(
        probs.astype(np.float64), labels.astype(np.int64)[..., np.newaxis], axis=-1
    )
    loss = float(-np.log(np.maximum(picked, PROBABILITY_FLOOR)).sum())

    if reduction == "mean":
        return loss / labels.size
    return loss


# pylint: disable=too-many-arguments,too-many-positional-arguments
def total_loss(
    probs: np.ndarray,
    y_noisy: np.ndarray,
    y_corrected: np.ndarray,
    lambda_i: float,
    lambda_v: float,
    flags: StageFlags,
    reduction: str = "sum",
) -> LossBreakdown:
    """
    lambda_v * lambda_i * CE(p, y_noisy) + CE(p, y_corrected), with
    each factor forced to its neutral value while its stage is off
    """
    if y_corrected.shape != y_noisy.shape:
        raise ShapeMismatch(
            f"corrected labels {y_corrected.shape} differ from {y_noisy.shape}"
        )

    if not flags.video_on:
        lambda_v = 1.0
    if not flags.image_on:
        lambda_i = 1.0
    if not flags.pixel_on:
        y_corrected = y_noisy

    weighted = lambda_v * lambda_i * cross_entropy(probs, y_noisy, reduction)
    corrected = cross_entropy(probs, y_corrected, reduction)
    return LossBreakdown(
        weighted_ce=weighted, corrected_ce=corrected, total=weighted + corrected
    )
