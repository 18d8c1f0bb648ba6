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
inject_noise_command.py
"""
import argparse
from ...utils.noise import NoiseInjector, load_noise_config
from ..base_command import BaseCommand


class InjectNoiseCommand(BaseCommand):
    """Corrupt labels of a clean dataset"""

    name = "inject-noise"
    help = "write noisy labels, noise variance maps and a noisy manifest"

    @classmethod
    def add_arguments(cls, parser: argparse.ArgumentParser):
        parser.add_argument(
            "--alpha", type=float, help="share of videos to corrupt, in [0, 1]"
        )

    def run(self):
        cfg = load_noise_config(
            self.args.config,
            alpha=self.args.alpha,
            seed=self.args.seed,
            threads=self.args.threads,
        )
        manifest = self.manifest()
        result = NoiseInjector(cfg).inject(manifest, self.out_dir())

        self.print_table(
            ("video", "selected", "noisy_pixels"),
            (
                (video_id, "yes" if video_id in result.selected else "no", count)
                for video_id, count in result.noisy_pixels.items()
            ),
        )
