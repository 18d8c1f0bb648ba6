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
evaluate_command.py
"""
import argparse
from ...utils.metrics import Evaluator
from ..base_command import BaseCommand


class EvaluateCommand(BaseCommand):
    """Score predictions and rectification outputs"""

    name = "evaluate"
    help = "mIoU, Dice, sequence mIoU and noise detection scores"

    @classmethod
    def add_arguments(cls, parser: argparse.ArgumentParser):
        parser.add_argument(
            "--report-dir",
            help="output folder of rectify, to score corrected labels and noise masks",
        )

    def run(self):
        evaluator = Evaluator(self.manifest(), threads=self.args.threads or 1)
        metrics = evaluator.evaluate(report_dir=self.args.report_dir)
        evaluator.save(metrics, self.out_dir())

        rows = []
        for scope, name, metric, value in Evaluator.table(metrics):
            if scope == "detection" and metric in ("selected", "true", "intersection"):
                rows.append((scope, name, metric, value))
            else:
                rows.append((scope, name, metric, f"{100.0 * value:.2f}%"))
        self.print_table(("scope", "name", "metric", "value"), rows)
