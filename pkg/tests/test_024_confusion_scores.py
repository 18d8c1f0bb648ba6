from unittest import TestCase
import numpy as np
from src.utils.errors import NoEvaluatedClasses, ShapeMismatch
from src.utils.metrics import (
    ConfusionMatrix,
    accumulate_confusion,
    per_class_iou,
    per_class_dice,
    miou,
    dice,
)


class TestConfusionMatrix(TestCase):

    def test_zeros(self):
        cm = ConfusionMatrix.zeros(3)
        self.assertEqual(cm.n_classes, 3)
        self.assertEqual(cm.total, 0)

    def test_fail_zeros(self):
        with self.assertRaises(ValueError):
            ConfusionMatrix.zeros(0)

    def test_accumulate_diagonal(self):
        labels = np.full((10, 10), 2, dtype=np.uint16)
        cm = accumulate_confusion(labels, labels, ConfusionMatrix.zeros(3))
        self.assertEqual(cm.counts[2, 2], 100)
        self.assertEqual(cm.total, 100)

    def test_accumulate_empty(self):
        empty = np.zeros((0, 4), dtype=np.uint16)
        cm = ConfusionMatrix.zeros(2)
        cm.counts[0, 1] = 5
        after = accumulate_confusion(empty, empty, cm)
        np.testing.assert_array_equal(after.counts, cm.counts)

    def test_accumulate_rows_are_truth_histogram(self):
        rng = np.random.default_rng(0)
        gt = rng.integers(0, 4, size=(20, 30))
        pred = rng.integers(0, 4, size=(20, 30))
        cm = accumulate_confusion(pred, gt, ConfusionMatrix.zeros(4))
        np.testing.assert_array_equal(
            cm.counts.sum(axis=1), np.bincount(gt.ravel(), minlength=4)
        )
        np.testing.assert_array_equal(
            cm.counts.sum(axis=0), np.bincount(pred.ravel(), minlength=4)
        )

    def test_accumulate_order_free(self):
        rng = np.random.default_rng(1)
        pairs = [
            (rng.integers(0, 3, size=(5, 5)), rng.integers(0, 3, size=(5, 5)))
            for _ in range(4)
        ]
        forward = ConfusionMatrix.zeros(3)
        for pred, gt in pairs:
            forward = accumulate_confusion(pred, gt, forward)
        backward = ConfusionMatrix.zeros(3)
        for pred, gt in reversed(pairs):
            backward = accumulate_confusion(pred, gt, backward)
        np.testing.assert_array_equal(forward.counts, backward.counts)

    def test_fail_shapes(self):
        with self.assertRaises(ShapeMismatch):
            accumulate_confusion(
                np.zeros((2, 3)), np.zeros((3, 2)), ConfusionMatrix.zeros(2)
            )

    def test_fail_classes(self):
        with self.assertRaises(ShapeMismatch):
            accumulate_confusion(
                np.full((2, 2), 3), np.zeros((2, 2)), ConfusionMatrix.zeros(2)
            )

    def test_merge(self):
        a = ConfusionMatrix(counts=np.array([[1, 2], [3, 4]]))
        b = ConfusionMatrix(counts=np.array([[4, 3], [2, 1]]))
        np.testing.assert_array_equal((a + b).counts, np.full((2, 2), 5))

    def test_fail_merge(self):
        with self.assertRaises(ShapeMismatch):
            ConfusionMatrix.zeros(2).merge(ConfusionMatrix.zeros(3))


class TestScores(TestCase):

    def test_perfect(self):
        labels = np.array([[0, 1], [2, 1]])
        cm = accumulate_confusion(labels, labels, ConfusionMatrix.zeros(3))
        self.assertEqual(miou(cm), 1.0)
        self.assertEqual(dice(cm), 1.0)

    def test_hand_example(self):
        gt = np.array([[0, 0], [1, 1]])
        pred = np.zeros((2, 2), dtype=np.int64)
        cm = accumulate_confusion(pred, gt, ConfusionMatrix.zeros(2))

        np.testing.assert_array_equal(per_class_iou(cm), [0.5, 0.0])
        np.testing.assert_allclose(per_class_dice(cm), [2 / 3, 0.0])
        self.assertEqual(miou(cm), 0.25)
        self.assertAlmostEqual(dice(cm), 1 / 3, places=15)

    def test_absent_class_excluded(self):
        gt = np.array([[0, 1], [1, 0]])
        cm = accumulate_confusion(gt, gt, ConfusionMatrix.zeros(4))
        self.assertTrue(np.isnan(per_class_iou(cm)[3]))
        self.assertTrue(np.isnan(per_class_dice(cm)[2]))
        self.assertEqual(miou(cm), 1.0)

    def test_single_class(self):
        labels = np.zeros((3, 3), dtype=np.int64)
        cm = accumulate_confusion(labels, labels, ConfusionMatrix.zeros(1))
        self.assertEqual(dice(cm), 1.0)

    def test_fail_nothing_evaluated(self):
        with self.assertRaises(NoEvaluatedClasses):
            miou(ConfusionMatrix.zeros(3))

        with self.assertRaises(NoEvaluatedClasses):
            dice(ConfusionMatrix.zeros(3))

    def test_dice_bounds_iou(self):
        rng = np.random.default_rng(42)
        for _ in range(1000):
            n_classes = int(rng.integers(1, 6))
            counts = rng.integers(0, 50, size=(n_classes, n_classes))
            cm = ConfusionMatrix(counts=counts)
            iou = per_class_iou(cm)
            scores = per_class_dice(cm)
            included = ~np.isnan(iou)
            np.testing.assert_array_equal(included, ~np.isnan(scores))
            self.assertTrue(np.all(scores[included] >= iou[included]))
            self.assertTrue(np.all((iou[included] >= 0) & (iou[included] <= 1)))
