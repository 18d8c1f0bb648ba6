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
rectify_command.py
"""
import argparse
from ...utils.constants import VALID_REFERENCES
from ...utils.rectifier import DatasetRectifier, load_rectify_config
from ..base_command import BaseCommand


class RectifyCommand(BaseCommand):
    """Run both rectification passes and write the report"""

    name = "rectify"
    help = "detect noisy pixels, correct labels and weigh frames and videos"

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
            epoch=self.args.epoch,
            seed=self.args.seed,
            threads=self.args.threads,
            reference=self.args.reference,
        )
        out = self.out_dir()
        rectifier = DatasetRectifier(self.manifest(), config)
        report = rectifier.rectify()
        rectifier.save(report, out)

        flags = report.flags
        th = report.thresholds
        print(
            f"epoch {report.epoch}: video={flags.video_on} image={flags.image_on} "
            + f"pixel={flags.pixel_on}"
        )
        print(f"t_p={th.t_p:.6f}  t_n={th.t_n:.6f}  q_bar={th.q_bar:.6f}")
        self.print_table(
            ("video", "q_v", "rank", "lambda_v"),
            (
                (v.video_id, f"{v.q_v:.4f}", v.rank, f"{v.lambda_v:.4f}")
                for v in report.videos
            ),
        )
        if report.losses is not None:
            print(
                f"loss: weighted_ce={report.losses.weighted_ce:.6f} "
                + f"corrected_ce={report.losses.corrected_ce:.6f} "
                + f"total={report.losses.total:.6f}"
            )
