import math
from unittest import TestCase
import numpy as np
from src.utils.errors import ShapeMismatch, InvalidPrediction
from src.utils.rectifier import (
    StageFlags,
    LossBreakdown,
    check_probabilities,
    cross_entropy,
    total_loss,
)
from .shared_mocks import one_hot, uniform_probs

ALL_ON = StageFlags(video_on=True, image_on=True, pixel_on=True)
ALL_OFF = StageFlags()


class TestCrossEntropy(TestCase):

    def setUp(self):
        rng = np.random.default_rng(1)
        self.labels = rng.integers(0, 4, size=(6, 5)).astype(np.uint16)

    def test_one_hot_correct_is_zero(self):
        self.assertEqual(cross_entropy(one_hot(self.labels, 4), self.labels), 0.0)

    def test_uniform(self):
        loss = cross_entropy(uniform_probs(6, 5, 4), self.labels)
        self.assertAlmostEqual(loss, 30 * math.log(4), delta=1e-6)

    def test_mean_reduction(self):
        loss = cross_entropy(uniform_probs(6, 5, 4), self.labels, reduction="mean")
        self.assertAlmostEqual(loss, math.log(4), delta=1e-6)

    def test_zero_probability_is_clamped(self):
        probs = one_hot(np.zeros((1, 1)), 2)
        loss = cross_entropy(probs, np.ones((1, 1), dtype=np.uint16))
        self.assertAlmostEqual(loss, -math.log(1e-12), places=6)

    def test_fail_reduction(self):
        with self.assertRaises(ValueError):
            cross_entropy(uniform_probs(1, 1, 2), np.zeros((1, 1)), reduction="max")

    def test_fail_shapes(self):
        with self.assertRaises(ShapeMismatch):
            cross_entropy(uniform_probs(2, 2, 2), np.zeros((2, 3), dtype=np.uint16))
        with self.assertRaises(ShapeMismatch):
            cross_entropy(uniform_probs(1, 1, 2), np.full((1, 1), 2, dtype=np.uint16))


class TestCheckProbabilities(TestCase):

    def test_valid(self):
        check_probabilities(uniform_probs(3, 3, 5))

    def test_fail_not_normalized(self):
        with self.assertRaises(InvalidPrediction):
            check_probabilities(np.full((2, 2, 2), 0.6, dtype=np.float32))

    def test_fail_negative(self):
        probs = np.array([[[1.5, -0.5]]], dtype=np.float32)
        with self.assertRaises(InvalidPrediction):
            check_probabilities(probs)

    def test_fail_rank(self):
        with self.assertRaises(ShapeMismatch):
            check_probabilities(np.ones((2, 2), dtype=np.float32))


class TestTotalLoss(TestCase):

    def setUp(self):
        rng = np.random.default_rng(2)
        self.noisy = rng.integers(0, 3, size=(4, 4)).astype(np.uint16)
        self.corrected = rng.integers(0, 3, size=(4, 4)).astype(np.uint16)
        raw = rng.random((4, 4, 3)) + 0.1
        self.probs = (raw / raw.sum(axis=-1, keepdims=True)).astype(np.float32)

    def test_all_stages_off_is_twice_ce(self):
        loss = total_loss(self.probs, self.noisy, self.corrected, 3.0, 0.4, ALL_OFF)
        ce = cross_entropy(self.probs, self.noisy)
        self.assertAlmostEqual(loss.total, 2 * ce, places=9)
        self.assertAlmostEqual(loss.weighted_ce, ce, places=9)

    def test_all_stages_on(self):
        loss = total_loss(self.probs, self.noisy, self.corrected, 1.5, 0.4, ALL_ON)
        weighted = 0.4 * 1.5 * cross_entropy(self.probs, self.noisy)
        corrected = cross_entropy(self.probs, self.corrected)
        self.assertAlmostEqual(loss.weighted_ce, weighted, places=9)
        self.assertAlmostEqual(loss.corrected_ce, corrected, places=9)
        self.assertAlmostEqual(loss.total, weighted + corrected, places=9)

    def test_video_stage_only(self):
        flags = StageFlags(video_on=True)
        loss = total_loss(self.probs, self.noisy, self.corrected, 1.5, 0.4, flags)
        ce = cross_entropy(self.probs, self.noisy)
        self.assertAlmostEqual(loss.weighted_ce, 0.4 * ce, places=9)
        self.assertAlmostEqual(loss.corrected_ce, ce, places=9)

    def test_to_dict(self):
        self.assertEqual(
            LossBreakdown(weighted_ce=1.0, corrected_ce=2.0, total=3.0).to_dict(),
            {"weighted_ce": 1.0, "corrected_ce": 2.0, "total": 3.0},
        )

    def test_fail_shapes(self):
        with self.assertRaises(ShapeMismatch):
            total_loss(self.probs, self.noisy, self.noisy[:2], 1.0, 1.0, ALL_ON)
