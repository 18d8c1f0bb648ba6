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
scores.py

Classes with no true, predicted nor missed pixel (TP + FP + FN = 0)
are left out of the means.
"""
import numpy as np
from ..errors import NoEvaluatedClasses
from .confusion import ConfusionMatrix


def _terms(cm: ConfusionMatrix) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    counts = cm.counts.astype(np.float64)
    tp = np.diag(counts)
    fp = counts.sum(axis=0) - tp
    fn = counts.sum(axis=1) - tp
    return tp, fp, fn


def per_class_iou(cm: ConfusionMatrix) -> np.ndarray:
    """TP / (TP + FP + FN), NaN for excluded classes"""
    tp, fp, fn = _terms(cm)
    union = tp + fp + fn
    iou = np.full(cm.n_classes, np.nan)
    np.divide(tp, union, out=iou, where=union > 0)
    return iou


def per_class_dice(cm: ConfusionMatrix) -> np.ndarray:
    """2TP / (2TP + FP + FN), NaN for excluded classes"""
    tp, fp, fn = _terms(cm)
    denominator = 2 * tp + fp + fn
    dice_scores = np.full(cm.n_classes, np.nan)
    np.divide(2 * tp, denominator, out=dice_scores, where=denominator > 0)
    return dice_scores


def _mean(values: np.ndarray) -> float:
    included = values[~np.isnan(values)]
    if included.size == 0:
        raise NoEvaluatedClasses("Every class is absent from truth and prediction")
    return float(included.mean())


def miou(cm: ConfusionMatrix) -> float:
    """Mean IoU over included classes, in [0, 1]"""
    return _mean(per_class_iou(cm))


def dice(cm: ConfusionMatrix) -> float:
    """Mean Dice over included classes, in [0, 1]"""
    return _mean(per_class_dice(cm))
