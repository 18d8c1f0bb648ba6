import os
import tempfile
from unittest import TestCase
import numpy as np
from src.utils.errors import (
    MalformedHeader,
    TruncatedData,
    UnsupportedDtype,
    RejectedNonFinite,
    MissingFile,
)
from src.utils.tensorio import TensorReader, TensorWriter, load_tensor, save_tensor


class TestTensorReader(TestCase):

    def setUp(self):
        self.tmp = tempfile.TemporaryDirectory()

    def tearDown(self):
        self.tmp.cleanup()

    def _path(self, name: str) -> str:
        return os.path.join(self.tmp.name, name)

    def _raw(self, name: str, data: bytes) -> str:
        path = self._path(name)
        with open(path, "wb") as f:
            f.write(data)
        return path

    def test_fail_missing_file(self):
        path = self._path("nope.tns")
        with self.assertRaises(MissingFile) as exc_info:
            TensorReader(filename=path)

        self.assertEqual(str(exc_info.exception), f"File {path} do not exist")

    def test_load_saved_tensors(self):
        rng = np.random.default_rng(3)
        tensors = {
            "f.tns": rng.standard_normal((4, 5, 3)).astype(np.float32),
            "l.tns": rng.integers(0, 7, size=(6, 2)).astype(np.uint16),
            "m.tns": rng.integers(0, 2, size=(3,)).astype(np.uint8),
        }
        for name, array in tensors.items():
            save_tensor(array, self._path(name))
            loaded = load_tensor(self._path(name))
            self.assertEqual(loaded.dtype, array.dtype)
            np.testing.assert_array_equal(loaded, array)

    def test_load_zero_sized(self):
        save_tensor(np.zeros((0, 3), dtype=np.float32), self._path("z.tns"))
        loaded = load_tensor(self._path("z.tns"))
        self.assertEqual(loaded.shape, (0, 3))
        self.assertEqual(loaded.dtype, np.float32)

    def test_fail_expected_dtype(self):
        save_tensor(np.zeros((2, 2), dtype=np.uint8), self._path("m.tns"))
        with self.assertRaises(UnsupportedDtype):
            load_tensor(self._path("m.tns"), expect=np.uint16)

    def test_fail_bad_magic(self):
        path = self._raw("bad.tns", b"XXXX" + bytes(20))
        with self.assertRaises(MalformedHeader):
            load_tensor(path)

    def test_fail_short_header(self):
        path = self._raw("short.tns", b"ART")
        with self.assertRaises(MalformedHeader):
            load_tensor(path)

    def test_fail_unknown_version(self):
        data = bytearray(TensorWriter.encode(np.zeros(2, dtype=np.uint8)))
        data[4] = 9
        path = self._raw("v.tns", bytes(data))
        with self.assertRaises(MalformedHeader):
            load_tensor(path)

    def test_fail_unknown_dtype_code(self):
        data = bytearray(TensorWriter.encode(np.zeros(2, dtype=np.uint8)))
        data[6] = 42
        path = self._raw("d.tns", bytes(data))
        with self.assertRaises(UnsupportedDtype):
            load_tensor(path)

    def test_fail_truncated_dims(self):
        data = TensorWriter.encode(np.zeros((2, 2), dtype=np.uint8))
        path = self._raw("t.tns", data[:12])
        with self.assertRaises(MalformedHeader):
            load_tensor(path)

    def test_fail_truncated_payload(self):
        data = TensorWriter.encode(np.zeros((2, 2), dtype=np.uint16))
        path = self._raw("t.tns", data[:-1])
        with self.assertRaises(TruncatedData):
            load_tensor(path)

    def test_fail_trailing_bytes(self):
        data = TensorWriter.encode(np.zeros((2, 2), dtype=np.uint16))
        path = self._raw("t.tns", data + b"\x00")
        with self.assertRaises(MalformedHeader):
            load_tensor(path)

    def test_fail_non_finite(self):
        data = TensorWriter.encode(np.array([1.0, 2.0], dtype=np.float32))
        data = data[:-4] + np.array([np.inf], dtype="<f4").tobytes()
        path = self._raw("inf.tns", data)
        with self.assertRaises(RejectedNonFinite):
            load_tensor(path)

    def test_load_npy(self):
        array = np.arange(6, dtype=np.uint16).reshape(2, 3)
        np.save(self._path("a.npy"), array)
        loaded = load_tensor(self._path("a.npy"), expect=np.uint16)
        np.testing.assert_array_equal(loaded, array)

    def test_load_npy_big_endian(self):
        array = np.arange(6, dtype=">f4").reshape(3, 2)
        np.save(self._path("b.npy"), array)
        loaded = load_tensor(self._path("b.npy"), expect=np.float32)
        self.assertEqual(loaded.dtype, np.float32)
        np.testing.assert_array_equal(loaded, np.arange(6).reshape(3, 2))

    def test_fail_npy_dtype(self):
        np.save(self._path("i.npy"), np.arange(3, dtype=np.int64))
        with self.assertRaises(UnsupportedDtype):
            load_tensor(self._path("i.npy"))

    def test_fail_npy_truncated(self):
        np.save(self._path("c.npy"), np.arange(100, dtype=np.float32))
        with open(self._path("c.npy"), "rb") as f:
            data = f.read()
        path = self._raw("cut.npy", data[:-40])
        with self.assertRaises((TruncatedData, MalformedHeader)):
            load_tensor(path)

    def test_peek_shape(self):
        save_tensor(np.zeros((4, 5, 3), dtype=np.float32), self._path("f.tns"))
        np.save(self._path("f.npy"), np.zeros((7, 2), dtype=np.uint8))
        self.assertEqual(TensorReader(self._path("f.tns")).peek_shape(), (4, 5, 3))
        self.assertEqual(TensorReader(self._path("f.npy")).peek_shape(), (7, 2))

    def test_fail_peek_shape(self):
        path = self._raw("bad.tns", b"nothing here")
        with self.assertRaises(MalformedHeader):
            TensorReader(path).peek_shape()
