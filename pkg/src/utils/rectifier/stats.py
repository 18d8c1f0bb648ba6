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
stats.py
"""
import math
import typing
from dataclasses import dataclass, asdict
import numpy as np
from ..errors import NoDefinedEntries, EmptyDataset
from ..affinity import AffinityPair


@dataclass(frozen=True)
class ImageStats:
    """Mean defined affinities of an image and its confidence q"""

    mean_ap: float
    mean_an: float

    @property
    def q(self) -> float:
        """Affinity confidence"""
        return self.mean_ap + 1.0 - self.mean_an

    def to_dict(self) -> dict[str, float]:
        """Serializable form"""
        return {"mean_ap": self.mean_ap, "mean_an": self.mean_an, "q": self.q}


@dataclass(frozen=True)
class Thresholds:
    """Dataset-wide positive and negative thresholds"""

    t_p: float
    t_n: float

    @property
    def q_bar(self) -> float:
        """Average affinity confidence"""
        return self.t_p + 1.0 - self.t_n

    def to_dict(self) -> dict[str, float]:
        """Serializable form"""
        return {**asdict(self), "q_bar": self.q_bar}


def image_stats(pair: AffinityPair) -> ImageStats:
    """Means over defined entries only"""
    if not pair.defined_p.any():
        raise NoDefinedEntries("No defined positive affinity entry")
    if not pair.defined_n.any():
        raise NoDefinedEntries("No defined negative affinity entry")

    return ImageStats(
        mean_ap=float(np.mean(pair.a_p[pair.defined_p.astype(bool)])),
        mean_an=float(np.mean(pair.a_n[pair.defined_n.astype(bool)])),
    )


def dataset_thresholds(stats: typing.Sequence[ImageStats]) -> Thresholds:
    """Average the per-image means over the dataset"""
    if len(stats) == 0:
        raise EmptyDataset("Cannot compute thresholds over zero images")

    # fsum is exactly rounded, so the result does not depend on order
    return Thresholds(
        t_p=math.fsum(s.mean_ap for s in stats) / len(stats),
        t_n=math.fsum(s.mean_an for s in stats) / len(stats),
    )
