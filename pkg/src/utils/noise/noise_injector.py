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
noise_injector.py

Corrupt the labels of a random share of the videos. Frames of a
selected video are cut in groups of consecutive frames; for every
(group, foreground class) one noise type and one set of parameters
are drawn and applied to all frames of the group.
"""
import os
import json
import typing
from dataclasses import dataclass, field
import numpy as np
from ..trigger import Trigger
from ..constants import BACKGROUND_CLASS
from ..errors import IoFailure
from ..rng import substream
from ..workers import ordered_map
from ..tensorio import (
    DatasetManifest,
    VideoEntry,
    FrameEntry,
    load_tensor,
    save_tensor,
    save_manifest,
)
from .noise_config import NoiseConfig
from .grouping import select_videos, group_frames
from .morphology import DilationNoise, ErosionNoise
from .affine import AffineTransform
from .polygon import PolygonNoise

NoiseOp = DilationNoise | ErosionNoise | AffineTransform | PolygonNoise


def sample_noise(
    kind: str,
    labels: np.ndarray,
    class_id: int,
    cfg: NoiseConfig,
    rng: np.random.Generator,
) -> NoiseOp:
    """Draw the parameters of a noise of type ``kind``"""
    if kind == "dilation":
        low, high = cfg.dilation_radius
        return DilationNoise(radius=int(rng.integers(low, high + 1)))
    if kind == "erosion":
        low, high = cfg.erosion_radius
        return ErosionNoise(radius=int(rng.integers(low, high + 1)))
    if kind == "affine":
        return AffineTransform.sample(cfg.affine, rng)
    if kind == "polygon":
        return PolygonNoise.sample(labels, class_id, cfg.polygon, rng)
    raise ValueError(f"Unknown noise type: {kind}")


def inject_labels(
    video_id: str, clean: list[np.ndarray], cfg: NoiseConfig
) -> tuple[list[np.ndarray], list[dict[str, typing.Any]]]:
    """
    Noisy copies of one video's clean label maps, plus a log of the
    noise drawn for every group and class
    """
    rng = substream(cfg.seed, "video", video_id)
    noisy = [labels.copy() for labels in clean]
    log = []

    for group in group_frames(len(clean), rng, cfg.group_min, cfg.group_max):
        present = np.unique(np.concatenate([clean[i].ravel() for i in group]))
        classes = [int(c) for c in present if c != BACKGROUND_CLASS]

        for class_id in classes:
            kind = cfg.noise_types[int(rng.integers(len(cfg.noise_types)))]
            noise = sample_noise(kind, clean[group.start], class_id, cfg, rng)
            for index in group:
                noisy[index] = noise.apply(noisy[index], class_id)

            log.append(
                {
                    "frames": [group.start, group.stop],
                    "class_id": class_id,
                    **noise.to_dict(),
                }
            )

    return noisy, log


@dataclass
class InjectionResult:
    """Noisy manifest and what was done to reach it"""

    manifest: DatasetManifest
    selected: list[str] = field(default_factory=list)
    noisy_pixels: dict[str, int] = field(default_factory=dict)
    log: dict[str, list] = field(default_factory=dict)

    def to_dict(self) -> dict[str, typing.Any]:
        """Serializable summary"""
        return {
            "selected": self.selected,
            "noisy_pixels": self.noisy_pixels,
            "noise": self.log,
        }


class NoiseInjector(Trigger):
    """Write noisy labels, noise variance maps and the noisy manifest"""

    def __init__(self, cfg: NoiseConfig):
        super().__init__()
        self.cfg = cfg

    @property
    def cfg(self) -> NoiseConfig:
        """Getter for noise config"""
        return self._cfg

    @cfg.setter
    def cfg(self, value: NoiseConfig):
        """Setter for noise config"""
        self.debug(f"cfg::setter={value}")
        self._cfg = value

    def _inject_video(
        self, video: VideoEntry, selected: bool, out_dir: str
    ) -> tuple[VideoEntry, int, list]:
        clean_paths = [
            frame.clean_label_path or frame.label_path for frame in video.frames
        ]
        clean = [load_tensor(path, expect=np.uint16) for path in clean_paths]

        if selected:
            noisy, log = inject_labels(video.video_id, clean, self.cfg)
        else:
            noisy, log = clean, []

        frames = []
        total = 0
        for frame, clean_path, clean_map, noisy_map in zip(
            video.frames, clean_paths, clean, noisy
        ):
            variance = (noisy_map != clean_map).astype(np.uint8)
            total += int(variance.sum())
            variance_path = os.path.join(
                out_dir, "variance", video.video_id, f"{frame.frame_id}.tns"
            )
            save_tensor(variance, variance_path)

            label_path = clean_path
            if selected:
                label_path = os.path.join(
                    out_dir, "labels", video.video_id, f"{frame.frame_id}.tns"
                )
                save_tensor(noisy_map, label_path)

            frames.append(
                FrameEntry(
                    frame_id=frame.frame_id,
                    feature_path=frame.feature_path,
                    label_path=os.path.abspath(label_path),
                    prediction_path=frame.prediction_path,
                    clean_label_path=os.path.abspath(clean_path),
                )
            )

        self.debug(f"video::{video.video_id}::selected={selected}::noisy={total}")
        return VideoEntry(video_id=video.video_id, frames=frames), total, log

    def inject(self, manifest: DatasetManifest, out_dir: str) -> InjectionResult:
        """Corrupt a share ``alpha`` of the videos of ``manifest``"""
        ids = [video.video_id for video in manifest.videos]
        rng = substream(self.cfg.seed, "select")
        selected = set(select_videos(ids, self.cfg.alpha, rng))
        self.info(f"Selected {len(selected)} of {len(ids)} videos")

        outcomes = ordered_map(
            lambda video: self._inject_video(
                video, video.video_id in selected, out_dir
            ),
            manifest.videos,
            self.cfg.threads,
        )

        result = InjectionResult(
            manifest=DatasetManifest(videos=[video for video, _, _ in outcomes]),
            selected=[video_id for video_id in ids if video_id in selected],
        )
        for video_id, (_, total, log) in zip(ids, outcomes):
            result.noisy_pixels[video_id] = total
            if log:
                result.log[video_id] = log

        save_manifest(result.manifest, os.path.join(out_dir, "manifest.json"))

        summary_path = os.path.join(out_dir, "noise.json")
        try:
            with open(summary_path, "w", encoding="utf8") as s_file:
                json.dump(result.to_dict(), s_file, indent=2, sort_keys=True)
                s_file.write("\n")
        except OSError as exc:
            raise IoFailure(f"Cannot write {summary_path}: {exc}") from exc

        self.info(f"Noisy manifest written to {out_dir}")
        return result


def inject(
    manifest: DatasetManifest, cfg: NoiseConfig, out_dir: str
) -> InjectionResult:
    """Inject noise into ``manifest`` and write the outputs to ``out_dir``"""
    return NoiseInjector(cfg).inject(manifest, out_dir)
