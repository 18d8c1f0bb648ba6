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
__init__.py
"""
# pylint: disable=unused-import
from .stats import ImageStats, Thresholds, image_stats, dataset_thresholds
from .supervision import (
    noisy_pixel_mask,
    correct_labels,
    image_weight,
    video_ranks,
    rank_weight,
    video_weights,
)
from .loss import LossBreakdown, check_probabilities, cross_entropy, total_loss
from .schedule import StageFlags, StageSchedule, stage_for_epoch
from .rectify_config import RectifyConfig, load_rectify_config
from .dataset_rectifier import (
    FrameRecord,
    VideoRecord,
    RectificationReport,
    DatasetRectifier,
    rectify_dataset,
)
