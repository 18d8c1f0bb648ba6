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
rectify_config.py
"""
import math
import typing
from dataclasses import dataclass, asdict
from ..constants import (
    DEFAULT_THETA_L,
    DEFAULT_THETA_U,
    DEFAULT_VIDEO_EPOCH,
    DEFAULT_IMAGE_EPOCH,
    DEFAULT_PIXEL_EPOCH,
    VALID_REFERENCES,
    VALID_REDUCTIONS,
)
from ..config import load_document, check_keys
from ..errors import ConfigError
from .schedule import StageSchedule, StageFlags, stage_for_epoch


def _is_number(value: typing.Any) -> bool:
    return isinstance(value, (int, float)) and not isinstance(value, bool)


def _is_count(value: typing.Any) -> bool:
    return isinstance(value, int) and not isinstance(value, bool)


# pylint: disable=too-many-instance-attributes
@dataclass(frozen=True)
class RectifyConfig:
    """Settings of a rectification run"""

    theta_l: float = DEFAULT_THETA_L
    theta_u: float = DEFAULT_THETA_U
    video_epoch: int = DEFAULT_VIDEO_EPOCH
    image_epoch: int = DEFAULT_IMAGE_EPOCH
    pixel_epoch: int = DEFAULT_PIXEL_EPOCH
    epoch: int = 1
    loss_reduction: str = "sum"
    reference: str = "adjacent"
    seed: int = 0
    threads: int = 1

    def __post_init__(self):
        for name in ("theta_l", "theta_u"):
            value = getattr(self, name)
            if not _is_number(value) or not math.isfinite(value):
                raise ConfigError(f"{name} must be a finite number, got {value!r}")

        if self.theta_l > self.theta_u:
            raise ConfigError(
                f"theta_l ({self.theta_l}) is greater than theta_u ({self.theta_u})"
            )

        for name in ("video_epoch", "image_epoch", "pixel_epoch", "epoch", "threads"):
            value = getattr(self, name)
            if not _is_count(value) or value < 1:
                raise ConfigError(f"{name} must be a positive integer, got {value!r}")

        if not _is_count(self.seed) or self.seed < 0:
            raise ConfigError(f"seed must be a non-negative integer, got {self.seed!r}")

        if self.loss_reduction not in VALID_REDUCTIONS:
            raise ConfigError(f"Invalid loss_reduction: {self.loss_reduction}")

        if self.reference not in VALID_REFERENCES:
            raise ConfigError(f"Invalid reference: {self.reference}")

        # raises InvalidSchedule on non-monotone epochs
        _ = self.schedule

    @property
    def schedule(self) -> StageSchedule:
        """Stage epochs"""
        return StageSchedule(
            video_epoch=self.video_epoch,
            image_epoch=self.image_epoch,
            pixel_epoch=self.pixel_epoch,
        )

    def flags(self) -> StageFlags:
        """Stages enrolled at :attr:`epoch`"""
        return stage_for_epoch(self.epoch, self.schedule)

    def to_dict(self) -> dict[str, typing.Any]:
        """Serializable form"""
        return asdict(self)


def load_rectify_config(path: str | None = None, **overrides) -> RectifyConfig:
    """
    Defaults, then values of the TOML/JSON file at ``path``, then
    ``overrides`` that are not None (command line flags)
    """
    document = load_document(path) if path is not None else {}
    check_keys(RectifyConfig, document)

    values = {**document}
    values.update({k: v for k, v in overrides.items() if v is not None})
    check_keys(RectifyConfig, values)
    return RectifyConfig(**values)
