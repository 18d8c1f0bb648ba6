import time
from unittest import TestCase
import numpy as np
from src.utils.errors import ShapeMismatch
from src.utils.affinity import affinity_fast, affinity_bruteforce
from src.utils.affinity.kernel import class_sums


def _random_instance(rng: np.random.Generator, index: int):
    height = int(rng.integers(1, 17))
    width = int(rng.integers(1, 17))
    channels = int(rng.integers(1, 9))
    n_classes = int(rng.integers(1, 6))

    f_t = rng.standard_normal((height, width, channels)).astype(np.float32)
    f_prev = rng.standard_normal((height, width, channels)).astype(np.float32)
    # a few zero feature vectors
    f_t[rng.random((height, width)) < 0.05] = 0.0

    y_t = rng.integers(0, n_classes, size=(height, width)).astype(np.uint16)
    y_prev = rng.integers(0, n_classes, size=(height, width)).astype(np.uint16)

    # degenerate single-class frames
    if index % 10 == 0:
        y_prev[:] = 0
    if index % 10 == 5:
        y_t[:] = 2
        y_prev[:] = 2
    if index % 10 == 7:
        y_t[:] = 1
        y_prev[:] = 3
    return f_t, f_prev, y_t, y_prev


class TestKernel(TestCase):

    def test_class_sums(self):
        v = np.array([[1.0, 0.0], [0.0, 2.0], [3.0, 1.0]])
        sums, counts = class_sums(v, np.array([0, 2, 0]), 3)
        np.testing.assert_array_equal(sums, [[4.0, 1.0], [0.0, 0.0], [0.0, 2.0]])
        np.testing.assert_array_equal(counts, [2, 0, 1])

    def test_matches_bruteforce_on_random_instances(self):
        rng = np.random.default_rng(2024)
        started = time.monotonic()

        for index in range(200):
            f_t, f_prev, y_t, y_prev = _random_instance(rng, index)
            fast = affinity_fast(f_t, f_prev, y_t, y_prev)
            slow = affinity_bruteforce(f_t, f_prev, y_t, y_prev)

            np.testing.assert_array_equal(fast.defined_p, slow.defined_p)
            np.testing.assert_array_equal(fast.defined_n, slow.defined_n)

            dp, dn = slow.defined_p.astype(bool), slow.defined_n.astype(bool)
            np.testing.assert_allclose(fast.a_p[dp], slow.a_p[dp], rtol=0, atol=1e-5)
            np.testing.assert_allclose(fast.a_n[dn], slow.a_n[dn], rtol=0, atol=1e-5)

            np.testing.assert_array_equal(fast.a_p[~dp], 1.0)
            np.testing.assert_array_equal(fast.a_n[~dn], -1.0)

        self.assertLess(time.monotonic() - started, 10.0)

    def test_shuffling_previous_pixels_changes_nothing(self):
        rng = np.random.default_rng(77)
        for index in range(100):
            f_t, f_prev, y_t, y_prev = _random_instance(rng, index)
            height, width, channels = f_prev.shape
            order = rng.permutation(height * width)
            f_shuffled = f_prev.reshape(-1, channels)[order].reshape(f_prev.shape)
            y_shuffled = y_prev.reshape(-1)[order].reshape(y_prev.shape)

            base = affinity_fast(f_t, f_prev, y_t, y_prev)
            shuffled = affinity_fast(f_t, f_shuffled, y_t, y_shuffled)
            np.testing.assert_array_equal(base.defined_p, shuffled.defined_p)
            np.testing.assert_array_equal(base.defined_n, shuffled.defined_n)
            np.testing.assert_allclose(base.a_p, shuffled.a_p, rtol=0, atol=1e-5)
            np.testing.assert_allclose(base.a_n, shuffled.a_n, rtol=0, atol=1e-5)

    def test_two_class_label_swap(self):
        rng = np.random.default_rng(78)
        for _ in range(100):
            height, width = rng.integers(2, 12, size=2)
            f_t = rng.standard_normal((height, width, 4)).astype(np.float32)
            f_prev = rng.standard_normal((height, width, 4)).astype(np.float32)
            y_t = rng.integers(0, 2, size=(height, width)).astype(np.uint16)
            y_prev = rng.integers(0, 2, size=(height, width)).astype(np.uint16)
            y_prev.flat[0], y_prev.flat[1] = 0, 1

            base = affinity_fast(f_t, f_prev, y_t, y_prev)
            both = affinity_fast(f_t, f_prev, 1 - y_t, 1 - y_prev)
            np.testing.assert_allclose(base.a_p, both.a_p, rtol=0, atol=1e-5)
            np.testing.assert_allclose(base.a_n, both.a_n, rtol=0, atol=1e-5)

            current = affinity_fast(f_t, f_prev, 1 - y_t, y_prev)
            np.testing.assert_allclose(base.a_p, current.a_n, rtol=0, atol=1e-5)
            np.testing.assert_allclose(base.a_n, current.a_p, rtol=0, atol=1e-5)

    def test_single_class_has_no_negative_entries(self):
        f = np.ones((3, 3, 2), dtype=np.float32)
        y = np.zeros((3, 3), dtype=np.uint16)
        pair = affinity_fast(f, f, y, y)
        self.assertFalse(pair.defined_n.any())
        self.assertFalse(pair.is_informative())
        np.testing.assert_allclose(pair.a_p, 1.0)

    def test_affinity_bounds(self):
        rng = np.random.default_rng(5)
        f_t = rng.standard_normal((6, 7, 4)).astype(np.float32)
        f_prev = rng.standard_normal((6, 7, 4)).astype(np.float32)
        y = rng.integers(0, 3, size=(6, 7)).astype(np.uint16)
        pair = affinity_fast(f_t, f_prev, y, y[::-1].copy())
        self.assertTrue((np.abs(pair.a_p) <= 1 + 1e-9).all())
        self.assertTrue((np.abs(pair.a_n) <= 1 + 1e-9).all())

    def test_to_tensors(self):
        f = np.eye(2, dtype=np.float32)[np.array([[0, 1]])]
        y = np.array([[0, 1]], dtype=np.uint16)
        tensors = affinity_fast(f, f, y, y).to_tensors()
        self.assertEqual(sorted(tensors), ["a_n", "a_p", "defined_n", "defined_p"])
        self.assertEqual(tensors["a_p"].dtype, np.float32)
        self.assertEqual(tensors["defined_n"].dtype, np.uint8)
        np.testing.assert_array_equal(tensors["a_p"], [[1.0, 1.0]])
        np.testing.assert_array_equal(tensors["a_n"], [[0.0, 0.0]])

    def test_fail_shapes(self):
        f = np.zeros((2, 2, 3), dtype=np.float32)
        with self.assertRaises(ShapeMismatch):
            affinity_fast(f, f, np.zeros((2, 3), dtype=np.uint16), np.zeros((2, 2)))
