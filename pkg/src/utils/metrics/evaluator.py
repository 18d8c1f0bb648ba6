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
evaluator.py
"""
import os
import csv
import json
import math
import typing
import numpy as np
from ..trigger import Trigger
from ..errors import IoFailure, MissingPredictions, NoEvaluatedClasses
from ..tensorio import DatasetManifest, FrameEntry, FrameRef, load_tensor
from ..workers import ordered_map
from .confusion import ConfusionMatrix, accumulate_confusion
from .scores import miou, dice, per_class_iou, per_class_dice
from .detection import DetectionScores, detection_counts


def _nullable(values: np.ndarray) -> list[float | None]:
    return [None if math.isnan(v) else float(v) for v in values]


def segmentation_scores(cm: ConfusionMatrix) -> dict[str, typing.Any]:
    """Means and per-class scores of a confusion matrix"""
    return {
        "miou": miou(cm),
        "dice": dice(cm),
        "per_class": {
            "iou": _nullable(per_class_iou(cm)),
            "dice": _nullable(per_class_dice(cm)),
        },
    }


def sequence_miou(
    manifest: DatasetManifest,
    predictions: typing.Mapping[FrameRef, np.ndarray],
    gts: typing.Mapping[FrameRef, np.ndarray],
    n_classes: int,
) -> dict[str, float]:
    """mIoU of each video over a confusion matrix of its frames only"""
    result = {}
    for video in manifest.videos:
        cm = ConfusionMatrix.zeros(n_classes)
        for frame in video.frames:
            ref = FrameRef(video.video_id, frame.frame_id)
            cm = accumulate_confusion(predictions[ref], gts[ref], cm)
        result[video.video_id] = miou(cm)
    return result


class Evaluator(Trigger):
    """
    Score a manifest: model predictions (argmax of the prediction
    maps) against clean labels, and optionally the outputs of a
    rectification run (corrected labels against clean labels,
    selected noise masks against the true noise)
    """

    def __init__(self, manifest: DatasetManifest, threads: int = 1):
        super().__init__()
        self.manifest = manifest
        self.threads = threads

    @property
    def threads(self) -> int:
        """Getter for threads"""
        self.debug(f"threads::getter={self._threads}")
        return self._threads

    @threads.setter
    def threads(self, value: int):
        """Setter for threads"""
        if value < 1:
            raise ValueError(f"Invalid number of threads: {value}")
        self.debug(f"threads::setter={value}")
        self._threads = value

    @staticmethod
    def clean_path(frame: FrameEntry) -> str:
        """Clean labels of a frame (its labels when no clean copy is listed)"""
        return frame.clean_label_path or frame.label_path

    def _load_frame(self, ref: FrameRef, report_dir: str | None) -> dict:
        frame = self.manifest.frame(ref)
        loaded = {"gt": load_tensor(Evaluator.clean_path(frame), expect=np.uint16)}

        if frame.prediction_path is not None:
            probs = load_tensor(frame.prediction_path, expect=np.float32)
            loaded["pred"] = np.argmax(probs, axis=-1)
            loaded["channels"] = probs.shape[-1]

        if report_dir is not None:
            prefix = os.path.join(report_dir, ref.video_id, ref.frame_id)
            loaded["corrected"] = load_tensor(f"{prefix}.labels.tns", expect=np.uint16)
            loaded["mask"] = load_tensor(f"{prefix}.mask.tns", expect=np.uint8)
            noisy = load_tensor(frame.label_path, expect=np.uint16)
            loaded["variance"] = noisy != loaded["gt"]

        return loaded

    def evaluate(self, report_dir: str | None = None) -> dict[str, typing.Any]:
        """Metrics document"""
        refs = self.manifest.refs()
        if not refs:
            raise NoEvaluatedClasses("Manifest has no frames to evaluate")

        with_predictions = self.manifest.has_predictions()
        if not with_predictions and report_dir is None:
            raise MissingPredictions("Nothing to evaluate: no predictions, no report")

        frames = ordered_map(
            lambda ref: self._load_frame(ref, report_dir), refs, self.threads
        )
        n_classes = self._class_count(frames)
        self.info(f"Evaluating {len(refs)} frames over {n_classes} classes")

        metrics: dict[str, typing.Any] = {"classes": n_classes}

        if with_predictions:
            preds = {ref: f["pred"] for ref, f in zip(refs, frames)}
            gts = {ref: f["gt"] for ref, f in zip(refs, frames)}
            cm = ConfusionMatrix.zeros(n_classes)
            for ref in refs:
                cm = accumulate_confusion(preds[ref], gts[ref], cm)
            metrics.update(segmentation_scores(cm))
            metrics["per_sequence"] = sequence_miou(
                self.manifest, preds, gts, n_classes
            )

        if report_dir is not None:
            cm = ConfusionMatrix.zeros(n_classes)
            detection = DetectionScores(selected=0, true=0, intersection=0)
            for loaded in frames:
                cm = accumulate_confusion(loaded["corrected"], loaded["gt"], cm)
                detection = detection.merge(
                    detection_counts(loaded["mask"], loaded["variance"])
                )
            metrics["label_quality"] = segmentation_scores(cm)
            metrics["detection"] = detection.to_dict()

        return metrics

    @staticmethod
    def _class_count(frames: list[dict]) -> int:
        highest = 0
        for loaded in frames:
            for key in ("gt", "pred", "corrected"):
                if key in loaded and loaded[key].size:
                    highest = max(highest, int(loaded[key].max()))
            if "channels" in loaded:
                highest = max(highest, loaded["channels"] - 1)
        return highest + 1

    def save(self, metrics: dict[str, typing.Any], out_dir: str):
        """metrics.json and metrics.csv"""
        json_path = os.path.join(out_dir, "metrics.json")
        csv_path = os.path.join(out_dir, "metrics.csv")

        try:
            os.makedirs(out_dir, exist_ok=True)
            with open(json_path, "w", encoding="utf8") as j_file:
                json.dump(metrics, j_file, indent=2, sort_keys=True)
                j_file.write("\n")

            with open(csv_path, "w", encoding="utf8", newline="") as c_file:
                writer = csv.writer(c_file)
                writer.writerow(["scope", "name", "metric", "value"])
                for row in Evaluator.table(metrics):
                    writer.writerow(row)

        except OSError as exc:
            raise IoFailure(f"Cannot write metrics to {out_dir}: {exc}") from exc

        self.info(f"Metrics written to {json_path}")

    @staticmethod
    def table(metrics: dict[str, typing.Any]) -> list[tuple[str, str, str, float]]:
        """Flat (scope, name, metric, value) rows, excluded classes skipped"""
        rows = []
        for scope in ("prediction", "label_quality"):
            block = metrics if scope == "prediction" else metrics.get(scope)
            if not block or "miou" not in block:
                continue

            rows.append((scope, "all", "miou", block["miou"]))
            rows.append((scope, "all", "dice", block["dice"]))
            for name in ("iou", "dice"):
                for index, value in enumerate(block["per_class"][name]):
                    if value is not None:
                        rows.append((scope, f"class_{index}", name, value))

        for video_id, value in metrics.get("per_sequence", {}).items():
            rows.append(("sequence", video_id, "miou", value))

        for name, value in (metrics.get("detection") or {}).items():
            rows.append(("detection", "all", name, value))

        return rows
