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
dataset_rectifier.py

Two passes over a dataset. The first computes every affinity pair
and image statistic, then the thresholds and video ranks; the second
selects noisy pixels, corrects labels and weighs every frame.
"""
import os
import math
import json
import typing
from dataclasses import dataclass, field
import numpy as np
from ..trigger import Trigger
from ..errors import EmptyDataset, MissingPredictions, IoFailure
from ..tensorio import DatasetManifest, FrameRef, load_tensor, save_tensor
from ..affinity import AffinityPair, FrameAffinity
from ..workers import ordered_map
from .stats import ImageStats, Thresholds, image_stats, dataset_thresholds
from .supervision import (
    noisy_pixel_mask,
    correct_labels,
    image_weight,
    video_ranks,
    rank_weight,
)
from .loss import LossBreakdown, check_probabilities, total_loss
from .schedule import StageFlags
from .rectify_config import RectifyConfig


# pylint: disable=too-many-instance-attributes
@dataclass
class FrameRecord:
    """Outcome of one frame"""

    video_id: str
    frame_id: str
    stats: ImageStats | None
    q: float
    lambda_i: float
    mask: np.ndarray
    labels: np.ndarray
    losses: LossBreakdown | None = None

    @property
    def informative(self) -> bool:
        """False when the frame had no defined entry on some side"""
        return self.stats is not None

    def to_dict(self) -> dict[str, typing.Any]:
        """Serializable form, tensors excluded"""
        return {
            "video_id": self.video_id,
            "frame_id": self.frame_id,
            "informative": self.informative,
            "stats": self.stats.to_dict() if self.stats else None,
            "q": self.q,
            "lambda_i": self.lambda_i,
            "noisy_pixels": int(self.mask.sum()),
            "losses": self.losses.to_dict() if self.losses else None,
        }


@dataclass
class VideoRecord:
    """Confidence, rank and weight of one video"""

    video_id: str
    q_v: float
    rank: int
    lambda_v: float

    def to_dict(self) -> dict[str, typing.Any]:
        """Serializable form"""
        return {
            "video_id": self.video_id,
            "q_v": self.q_v,
            "rank": self.rank,
            "lambda_v": self.lambda_v,
        }


@dataclass
class RectificationReport:
    """Everything a rectification run produces"""

    epoch: int
    flags: StageFlags
    thresholds: Thresholds
    videos: list[VideoRecord] = field(default_factory=list)
    frames: list[FrameRecord] = field(default_factory=list)
    losses: LossBreakdown | None = None

    def to_dict(self) -> dict[str, typing.Any]:
        """Serializable form, tensors excluded"""
        return {
            "epoch": self.epoch,
            "stages": self.flags.to_dict(),
            "thresholds": self.thresholds.to_dict(),
            "videos": [video.to_dict() for video in self.videos],
            "frames": [frame.to_dict() for frame in self.frames],
            "losses": self.losses.to_dict() if self.losses else None,
        }


class DatasetRectifier(Trigger):
    """Run the multi-scale supervision over a manifest"""

    def __init__(self, manifest: DatasetManifest, config: RectifyConfig):
        super().__init__()
        self.manifest = manifest
        self.config = config

    @property
    def manifest(self) -> DatasetManifest:
        """Getter for manifest"""
        return self._manifest

    @manifest.setter
    def manifest(self, value: DatasetManifest):
        """Setter for manifest"""
        self.debug(f"manifest::setter={len(value.videos)} videos")
        self._manifest = value

    @property
    def config(self) -> RectifyConfig:
        """Getter for config"""
        return self._config

    @config.setter
    def config(self, value: RectifyConfig):
        """Setter for config"""
        self.debug(f"config::setter={value}")
        self._config = value

    def compute_affinities(self) -> list[tuple[FrameRef, AffinityPair]]:
        """Affinity pair of every frame, in manifest order"""
        refs = self.manifest.refs()
        if not refs:
            raise EmptyDataset("Manifest has no frames")

        affinity = FrameAffinity(
            self.manifest, reference=self.config.reference, seed=self.config.seed
        )
        pairs = ordered_map(affinity.compute, refs, self.config.threads)
        return list(zip(refs, pairs))

    # pylint: disable=too-many-locals
    def rectify(self) -> RectificationReport:
        """Both passes; the result is independent of thread count"""
        flags = self.config.flags()
        self.info(f"Epoch {self.config.epoch}: stages {flags}")

        if flags.pixel_on and not self.manifest.has_predictions():
            raise MissingPredictions(
                f"Pixel stage is on at epoch {self.config.epoch} "
                + "but some frames have no prediction"
            )

        # first pass
        pairs = self.compute_affinities()
        stats = [
            image_stats(pair) if pair.is_informative() else None for _, pair in pairs
        ]
        informative = [s for s in stats if s is not None]
        if not informative:
            raise EmptyDataset("No frame has defined affinity on both sides")

        if len(informative) < len(stats):
            self.warning(
                f"{len(stats) - len(informative)} frames without defined affinity"
            )

        thresholds = dataset_thresholds(informative)
        self.info(
            f"Thresholds t_p={thresholds.t_p:.6f} t_n={thresholds.t_n:.6f} "
            + f"q_bar={thresholds.q_bar:.6f}"
        )

        q_frames = [s.q if s is not None else thresholds.q_bar for s in stats]
        videos = self._video_records(pairs, q_frames, flags)
        lambda_v = {video.video_id: video.lambda_v for video in videos}

        # second pass
        with_losses = self.manifest.has_predictions()

        def _second_pass(index: int) -> FrameRecord:
            ref, pair = pairs[index]
            return self._frame_record(
                ref,
                pair,
                stats[index],
                q_frames[index],
                thresholds,
                lambda_v[ref.video_id],
                flags,
                with_losses,
            )

        frames = ordered_map(_second_pass, range(len(pairs)), self.config.threads)

        report = RectificationReport(
            epoch=self.config.epoch,
            flags=flags,
            thresholds=thresholds,
            videos=videos,
            frames=frames,
            losses=self._dataset_losses(frames) if with_losses else None,
        )
        self.info(
            f"Selected {sum(int(f.mask.sum()) for f in frames)} noisy pixels "
            + f"in {len(frames)} frames"
        )
        return report

    def _video_records(
        self,
        pairs: list[tuple[FrameRef, AffinityPair]],
        q_frames: list[float],
        flags: StageFlags,
    ) -> list[VideoRecord]:
        per_video: dict[str, list[float]] = {
            video.video_id: [] for video in self.manifest.videos
        }
        for (ref, _), q in zip(pairs, q_frames):
            per_video[ref.video_id].append(q)

        ids = list(per_video)
        q_v = [math.fsum(values) / len(values) for values in per_video.values()]
        ranks = video_ranks(q_v, ids)

        records = []
        for video_id, q, rank in zip(ids, q_v, ranks):
            weight = (
                rank_weight(rank, len(ids), self.config.theta_l, self.config.theta_u)
                if flags.video_on
                else 1.0
            )
            records.append(
                VideoRecord(video_id=video_id, q_v=q, rank=rank, lambda_v=weight)
            )
        return records

    # pylint: disable=too-many-arguments,too-many-positional-arguments
    def _frame_record(
        self,
        ref: FrameRef,
        pair: AffinityPair,
        stats: ImageStats | None,
        q: float,
        thresholds: Thresholds,
        lambda_v: float,
        flags: StageFlags,
        with_losses: bool,
    ) -> FrameRecord:
        entry = self.manifest.frame(ref)
        y_noisy = load_tensor(entry.label_path, expect=np.uint16)

        probs = None
        if with_losses:
            probs = load_tensor(entry.prediction_path, expect=np.float32)
            check_probabilities(probs, name=entry.prediction_path)

        if flags.pixel_on and stats is not None:
            mask = noisy_pixel_mask(pair, thresholds)
            labels = correct_labels(mask, y_noisy, probs)
        else:
            mask = np.zeros(y_noisy.shape, dtype=bool)
            labels = y_noisy

        lambda_i = image_weight(q, thresholds.q_bar) if flags.image_on else 1.0

        losses = None
        if probs is not None:
            losses = total_loss(
                probs,
                y_noisy,
                labels,
                lambda_i,
                lambda_v,
                flags,
                reduction=self.config.loss_reduction,
            )

        self.debug(f"frame::{ref}::lambda_i={lambda_i}::noisy={int(mask.sum())}")
        return FrameRecord(
            video_id=ref.video_id,
            frame_id=ref.frame_id,
            stats=stats,
            q=q,
            lambda_i=lambda_i,
            mask=mask,
            labels=labels,
            losses=losses,
        )

    def _dataset_losses(self, frames: list[FrameRecord]) -> LossBreakdown:
        # sums of per-frame sums, or mean of per-frame means
        scale = 1.0 if self.config.loss_reduction == "sum" else 1.0 / len(frames)
        weighted = math.fsum(f.losses.weighted_ce for f in frames) * scale
        corrected = math.fsum(f.losses.corrected_ce for f in frames) * scale
        return LossBreakdown(
            weighted_ce=weighted, corrected_ce=corrected, total=weighted + corrected
        )

    def save(self, report: RectificationReport, out_dir: str):
        """report.json plus mask and corrected label tensors per frame"""
        for frame in report.frames:
            prefix = os.path.join(out_dir, frame.video_id, frame.frame_id)
            save_tensor(frame.mask.astype(np.uint8), f"{prefix}.mask.tns")
            save_tensor(frame.labels.astype(np.uint16), f"{prefix}.labels.tns")

        report_path = os.path.join(out_dir, "report.json")
        try:
            os.makedirs(out_dir, exist_ok=True)
            with open(report_path, "w", encoding="utf8") as r_file:
                json.dump(report.to_dict(), r_file, indent=2, sort_keys=True)
                r_file.write("\n")
        except OSError as exc:
            raise IoFailure(f"Cannot write {report_path}: {exc}") from exc

        self.info(f"Report written to {report_path}")


def rectify_dataset(
    manifest: DatasetManifest, config: RectifyConfig
) -> RectificationReport:
    """Rectify a dataset"""
    return DatasetRectifier(manifest, config).rectify()
