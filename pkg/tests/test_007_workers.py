import time
import threading
from unittest import TestCase
from unittest.mock import patch
from src.utils.workers import ordered_map


class TestWorkers(TestCase):

    @patch("src.utils.workers.ThreadPoolExecutor")
    def test_single_thread_runs_inline(self, mock_executor):
        self.assertEqual(ordered_map(lambda x: x * 2, [1, 2, 3]), [2, 4, 6])
        mock_executor.assert_not_called()

    def test_order_kept_whatever_finishes_first(self):
        def slow_first(x):
            time.sleep(0.01 * (5 - x))
            return x

        self.assertEqual(ordered_map(slow_first, range(5), threads=4), [0, 1, 2, 3, 4])

    def test_uses_threads(self):
        seen = set()
        lock = threading.Lock()

        def record(x):
            with lock:
                seen.add(threading.get_ident())
            time.sleep(0.01)
            return x

        ordered_map(record, range(8), threads=4)
        self.assertGreater(len(seen), 1)

    def test_exception_propagates(self):
        def fail(x):
            raise RuntimeError(f"frame {x}")

        with self.assertRaises(RuntimeError):
            ordered_map(fail, [1, 2], threads=2)

    def test_fail_threads(self):
        with self.assertRaises(ValueError) as exc_info:
            ordered_map(str, [1], threads=0)

        self.assertEqual(str(exc_info.exception), "Invalid number of threads: 0")
