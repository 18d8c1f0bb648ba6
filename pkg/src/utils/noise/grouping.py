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
grouping.py
"""
import math
import typing
import numpy as np


def selected_count(n_videos: int, alpha: float) -> int:
    """Nearest integer to alpha * N, halves rounding up"""
    return math.floor(alpha * n_videos + 0.5)


def select_videos(
    video_ids: typing.Sequence[str], alpha: float, rng: np.random.Generator
) -> list[str]:
    """Uniformly random subset of ``video_ids``, kept in input order"""
    if not 0.0 <= alpha <= 1.0:
        raise ValueError(f"alpha must lie in [0, 1], got {alpha}")

    count = selected_count(len(video_ids), alpha)
    if count == 0:
        return []

    chosen = rng.choice(len(video_ids), size=count, replace=False)
    return [video_ids[index] for index in sorted(int(i) for i in chosen)]


def group_frames(
    n_frames: int,
    rng: np.random.Generator,
    group_min: int = 3,
    group_max: int = 6,
) -> list[range]:
    """
    Partition ``range(n_frames)`` into consecutive groups whose
    lengths are drawn uniformly in [group_min, group_max]; the last
    group is whatever remains, so it may be shorter.
    """
    if n_frames < 1:
        raise ValueError(f"Cannot group {n_frames} frames")

    if not 1 <= group_min <= group_max:
        raise ValueError(f"Invalid group size range [{group_min}, {group_max}]")

    groups = []
    start = 0
    while start < n_frames:
        length = int(rng.integers(group_min, group_max + 1))
        stop = min(start + length, n_frames)
        groups.append(range(start, stop))
        start = stop

    return groups
