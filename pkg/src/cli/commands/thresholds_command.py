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
thresholds_command.py
"""
import os
import json
import math
import argparse
from ...utils.errors import ParseError, MissingFile
from ...utils.rectifier import (
    ImageStats,
    dataset_thresholds,
    video_ranks,
    rank_weight,
    load_rectify_config,
)
from ..base_command import BaseCommand


class ThresholdsCommand(BaseCommand):
    """Reduce affinity summaries to dataset thresholds and video weights"""

    name = "thresholds"
    help = "compute t_p, t_n, q_bar and video weights from affinity summaries"

    @classmethod
    def add_arguments(cls, parser: argparse.ArgumentParser):
        parser.add_argument(
            "--stats",
            nargs="+",
            required=True,
            help="summary.json files written by the affinity subcommand",
        )

    @staticmethod
    def read_summary(path: str) -> list[dict]:
        """Frames listed in an affinity summary"""
        if not os.path.exists(path):
            raise MissingFile(f"File {path} do not exist")

        with open(path, "r", encoding="utf8") as s_file:
            try:
                summary = json.load(s_file)
            except json.JSONDecodeError as exc:
                raise ParseError(f"{path} is not valid json: {exc}") from exc

        if not isinstance(summary, dict) or not isinstance(summary.get("frames"), list):
            raise ParseError(f"{path} is not an affinity summary")
        return summary["frames"]

    def run(self):
        config = load_rectify_config(self.args.config)
        frames = []
        for path in self.args.stats:
            frames.extend(ThresholdsCommand.read_summary(path))

        try:
            stats = [
                ImageStats(mean_ap=f["stats"]["mean_ap"], mean_an=f["stats"]["mean_an"])
                if f["stats"] is not None
                else None
                for f in frames
            ]
            video_of = [str(f["video_id"]) for f in frames]
        except (KeyError, TypeError) as exc:
            raise ParseError(f"Invalid frame entry in summary: {exc}") from exc

        thresholds = dataset_thresholds([s for s in stats if s is not None])

        per_video: dict[str, list[float]] = {}
        for video_id, frame_stats in zip(video_of, stats):
            q = frame_stats.q if frame_stats is not None else thresholds.q_bar
            per_video.setdefault(video_id, []).append(q)

        ids = list(per_video)
        q_v = [math.fsum(values) / len(values) for values in per_video.values()]
        ranks = video_ranks(q_v, ids)
        videos = [
            {
                "video_id": video_id,
                "q_v": q,
                "rank": rank,
                "lambda_v": rank_weight(rank, len(ids), config.theta_l, config.theta_u),
            }
            for video_id, q, rank in zip(ids, q_v, ranks)
        ]

        document = {"thresholds": thresholds.to_dict(), "videos": videos}
        if self.args.out is not None:
            self.write_json(document, os.path.join(self.out_dir(), "thresholds.json"))

        print(
            f"t_p={thresholds.t_p:.6f}  t_n={thresholds.t_n:.6f}  "
            + f"q_bar={thresholds.q_bar:.6f}"
        )
        self.print_table(
            ("video", "q_v", "rank", "lambda_v"),
            (
                (v["video_id"], f"{v['q_v']:.4f}", v["rank"], f"{v['lambda_v']:.4f}")
                for v in videos
            ),
        )
