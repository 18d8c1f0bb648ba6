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
affinity_command.py
"""
import os
import argparse
from ...utils.constants import VALID_REFERENCES
from ...utils.errors import EmptyDataset
from ...utils.tensorio import save_tensor
from ...utils.affinity import FrameAffinity
from ...utils.rectifier import image_stats, load_rectify_config
from ...utils.workers import ordered_map
from ..base_command import BaseCommand


class AffinityCommand(BaseCommand):
    """Write the affinity pair and statistics of every frame"""

    name = "affinity"
    help = "compute positive/negative affinity maps of every frame"

    @classmethod
    def add_arguments(cls, parser: argparse.ArgumentParser):
        parser.add_argument(
            "--reference",
            choices=VALID_REFERENCES,
            help="frame paired with each frame (default: adjacent)",
        )

    def run(self):
        config = load_rectify_config(
            self.args.config,
            seed=self.args.seed,
            threads=self.args.threads,
            reference=self.args.reference,
        )
        manifest = self.manifest()
        refs = manifest.refs()
        if not refs:
            raise EmptyDataset("Manifest has no frames")

        out = self.out_dir()
        affinity = FrameAffinity(manifest, reference=config.reference, seed=config.seed)

        def _frame(ref) -> dict:
            pair = affinity.compute(ref)
            prefix = os.path.join(out, ref.video_id, ref.frame_id)
            for suffix, tensor in pair.to_tensors().items():
                save_tensor(tensor, f"{prefix}.{suffix}.tns")

            other = affinity.reference_for(ref)
            defined_p, defined_n = pair.defined_counts()
            sidecar = {
                "video_id": ref.video_id,
                "frame_id": ref.frame_id,
                "reference": {"video_id": other.video_id, "frame_id": other.frame_id},
                "defined_p": defined_p,
                "defined_n": defined_n,
                "informative": pair.is_informative(),
                "stats": image_stats(pair).to_dict() if pair.is_informative() else None,
            }
            self.write_json(sidecar, f"{prefix}.json")
            return sidecar

        frames = ordered_map(_frame, refs, config.threads)
        self.write_json(
            {"reference": config.reference, "seed": config.seed, "frames": frames},
            os.path.join(out, "summary.json"),
        )

        self.print_table(
            ("video", "frame", "mean_ap", "mean_an", "q"),
            (
                (f["video_id"], f["frame_id"], *_stats_cells(f["stats"]))
                for f in frames
            ),
        )
        self.info(f"Affinity of {len(frames)} frames written to {out}")


def _stats_cells(stats: dict | None) -> tuple[str, str, str]:
    if stats is None:
        return ("-", "-", "-")
    return tuple(f"{stats[key]:.4f}" for key in ("mean_ap", "mean_an", "q"))
