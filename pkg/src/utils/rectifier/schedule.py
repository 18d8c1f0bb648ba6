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
schedule.py
"""
from dataclasses import dataclass, asdict
from ..constants import DEFAULT_VIDEO_EPOCH, DEFAULT_IMAGE_EPOCH, DEFAULT_PIXEL_EPOCH
from ..errors import InvalidSchedule


@dataclass(frozen=True)
class StageFlags:
    """Which supervision stages are enrolled"""

    video_on: bool = False
    image_on: bool = False
    pixel_on: bool = False

    def __post_init__(self):
        if (self.pixel_on and not self.image_on) or (
            self.image_on and not self.video_on
        ):
            raise InvalidSchedule(f"Stages enroll as video, image, pixel: {self}")

    def to_dict(self) -> dict[str, bool]:
        """Serializable form"""
        return asdict(self)


@dataclass(frozen=True)
class StageSchedule:
    """First (1-based) epoch of each stage"""

    video_epoch: int = DEFAULT_VIDEO_EPOCH
    image_epoch: int = DEFAULT_IMAGE_EPOCH
    pixel_epoch: int = DEFAULT_PIXEL_EPOCH

    def __post_init__(self):
        if not 1 <= self.video_epoch <= self.image_epoch <= self.pixel_epoch:
            raise InvalidSchedule(
                "Stage epochs must satisfy 1 <= video <= image <= pixel, got "
                + f"{self.video_epoch}, {self.image_epoch}, {self.pixel_epoch}"
            )


def stage_for_epoch(epoch: int, schedule: StageSchedule) -> StageFlags:
    """A stage is on from its epoch onwards"""
    if epoch < 1:
        raise ValueError(f"Epochs are 1-based, got {epoch}")

    return StageFlags(
        video_on=epoch >= schedule.video_epoch,
        image_on=epoch >= schedule.image_epoch,
        pixel_on=epoch >= schedule.pixel_epoch,
    )
