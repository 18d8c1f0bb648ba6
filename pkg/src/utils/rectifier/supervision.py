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
supervision.py

Pixel, image and video level supervision: noisy pixel selection,
label correction and the two sample weights.
"""
import math
import typing
import numpy as np
from ..errors import ShapeMismatch, EmptyVideoList
from ..affinity import AffinityPair
from .stats import Thresholds


def noisy_pixel_mask(pair: AffinityPair, thresholds: Thresholds) -> np.ndarray:
    """
    Pixels whose positive affinity is at most t_p and negative
    affinity at least t_n. A pixel sitting exactly on both thresholds
    is not selected, so a clean dataset is a fixed point. Undefined
    entries are never selected.
    """
    on_both = (pair.a_p == thresholds.t_p) & (pair.a_n == thresholds.t_n)
    return (
        (pair.a_p <= thresholds.t_p)
        & (pair.a_n >= thresholds.t_n)
        & ~on_both
        & pair.defined_p.astype(bool)
        & pair.defined_n.astype(bool)
    )


def correct_labels(
    mask: np.ndarray, y_noisy: np.ndarray, probs: np.ndarray
) -> np.ndarray:
    """Replace masked labels by the predicted class (lowest index on ties)"""
    if mask.shape != y_noisy.shape or probs.shape[:-1] != y_noisy.shape:
        raise ShapeMismatch(
            f"mask {mask.shape}, labels {y_noisy.shape} and "
            + f"predictions {probs.shape} do not align"
        )

    predicted = np.argmax(probs, axis=-1).astype(y_noisy.dtype)
    return np.where(mask.astype(bool), predicted, y_noisy)


def image_weight(q: float, q_bar: float) -> float:
    """exp(2 (q - q_bar)): above 1 for images more confident than average"""
    return math.exp(2.0 * (q - q_bar))


def video_ranks(
    q_v: typing.Sequence[float], video_ids: typing.Sequence[str] | None = None
) -> list[int]:
    """1-based rank of each video by ascending q, ties by ascending id"""
    if video_ids is None:
        video_ids = [f"{i:012d}" for i in range(len(q_v))]

    if len(video_ids) != len(q_v):
        raise ShapeMismatch(f"{len(q_v)} confidences for {len(video_ids)} videos")

    order = sorted(range(len(q_v)), key=lambda i: (q_v[i], video_ids[i]))
    ranks = [0] * len(q_v)
    for rank, index in enumerate(order, start=1):
        ranks[index] = rank
    return ranks


def rank_weight(rank: int, count: int, theta_l: float, theta_u: float) -> float:
    """Piecewise-linear video weight of rank ``rank`` among ``count``"""
    if 3 * rank < count:
        return theta_l
    if 3 * rank <= 2 * count:
        return theta_l + ((3 * rank - count) / count) * (theta_u - theta_l)
    return theta_u


def video_weights(
    q_v: typing.Sequence[float],
    theta_l: float,
    theta_u: float,
    video_ids: typing.Sequence[str] | None = None,
) -> list[float]:
    """Video weights, in the order of ``q_v``"""
    if len(q_v) == 0:
        raise EmptyVideoList("Cannot weight zero videos")

    if theta_l > theta_u:
        raise ValueError(f"theta_l {theta_l} is greater than theta_u {theta_u}")

    count = len(q_v)
    return [
        rank_weight(rank, count, theta_l, theta_u)
        for rank in video_ranks(q_v, video_ids)
    ]
