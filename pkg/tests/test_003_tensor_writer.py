import os
import struct
import tempfile
from unittest import TestCase
from unittest.mock import patch
import numpy as np
from src.utils.errors import UnsupportedDtype, RejectedNonFinite, IoFailure
from src.utils.tensorio import TensorWriter, save_tensor
from src.utils.tensorio.base_tensor_file import MAGIC
from .shared_mocks import PropertyInstanceMock


class TestTensorWriter(TestCase):

    def setUp(self):
        self.tmp = tempfile.TemporaryDirectory()

    def tearDown(self):
        self.tmp.cleanup()

    @patch(
        "src.utils.tensorio.base_tensor_file.BaseTensorFile.filename",
        new_callable=PropertyInstanceMock,
    )
    def test_init_filename(self, mock_filename):
        w = TensorWriter(filename="labels.tns")
        mock_filename.assert_called_once_with(w, "labels.tns")

    def test_fail_empty_filename(self):
        with self.assertRaises(ValueError) as exc_info:
            TensorWriter(filename="")

        self.assertEqual(str(exc_info.exception), "Empty tensor filename")

    def test_encode_layout(self):
        array = np.array([[1, 2, 3], [4, 5, 6]], dtype=np.uint16)
        data = TensorWriter.encode(array)

        self.assertEqual(data[:4], MAGIC)
        self.assertEqual(struct.unpack_from("<HBB", data, 4), (1, 2, 2))
        self.assertEqual(struct.unpack_from("<QQ", data, 8), (2, 3))
        self.assertEqual(data[24:], struct.pack("<6H", 1, 2, 3, 4, 5, 6))

    def test_encode_float32_little_endian(self):
        array = np.array([1.5], dtype=">f4")
        with self.assertRaises(UnsupportedDtype):
            TensorWriter.encode(array)

        data = TensorWriter.encode(np.array([1.5], dtype=np.float32))
        self.assertEqual(data[6], 1)
        self.assertEqual(data[-4:], struct.pack("<f", 1.5))

    def test_encode_is_deterministic(self):
        array = np.arange(12, dtype=np.uint8).reshape(3, 4)
        self.assertEqual(TensorWriter.encode(array), TensorWriter.encode(array.copy()))

    def test_encode_empty_tensor(self):
        data = TensorWriter.encode(np.zeros((0, 4), dtype=np.uint8))
        self.assertEqual(len(data), 8 + 2 * 8)

    def test_fail_unsupported_dtype(self):
        with self.assertRaises(UnsupportedDtype) as exc_info:
            TensorWriter.encode(np.zeros(3, dtype=np.int32))

        self.assertEqual(str(exc_info.exception), "Unsupported dtype: int32")

    def test_save_creates_folders(self):
        path = os.path.join(self.tmp.name, "a", "b", "mask.tns")
        save_tensor(np.ones((2, 2), dtype=np.uint8), path)
        self.assertTrue(os.path.exists(path))
        self.assertEqual(os.path.getsize(path), 8 + 16 + 4)

    def test_fail_save_non_finite(self):
        path = os.path.join(self.tmp.name, "nan.tns")
        with self.assertRaises(RejectedNonFinite) as exc_info:
            save_tensor(np.array([np.nan], dtype=np.float32), path)

        self.assertEqual(str(exc_info.exception), f"{path} holds non-finite values")
        self.assertFalse(os.path.exists(path))

    @patch("builtins.open", side_effect=PermissionError("denied"))
    def test_fail_save_io(self, open_mock):
        path = os.path.join(self.tmp.name, "x.tns")
        with self.assertRaises(IoFailure) as exc_info:
            save_tensor(np.zeros(2, dtype=np.uint8), path)

        open_mock.assert_called_once_with(path, "wb")
        self.assertEqual(str(exc_info.exception), f"Cannot write {path}: denied")
