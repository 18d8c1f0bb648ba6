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
tensor_reader.py
"""
import io
import os
import math
import numpy as np
from ..errors import MalformedHeader, TruncatedData, MissingFile, UnsupportedDtype
from .base_tensor_file import (
    BaseTensorFile,
    MAGIC,
    VERSION,
    NPY_MAGIC,
    PREAMBLE,
    DIM,
    CODE_DTYPES,
    check_dtype,
    check_finite,
)


class TensorReader(BaseTensorFile):
    """Read tensors stored in the native container or in NPY format"""

    def __init__(self, filename: str):
        if not os.path.exists(filename):
            raise MissingFile(f"File {filename} do not exist")

        super().__init__(filename=filename)

    def load(self, expect: np.dtype | str | None = None) -> np.ndarray:
        """
        Load the tensor, optionally requiring a dtype (role check:
        features and probabilities float32, labels uint16, masks uint8)
        """
        self.debug(f"load::{self.filename}")
        with open(self.filename, "rb") as t_file:
            data = t_file.read()

        if data.startswith(NPY_MAGIC):
            array = self._parse_npy(data)
        else:
            array = self._parse_native(data)

        check_finite(array, self.filename)

        if expect is not None and array.dtype != np.dtype(expect):
            raise UnsupportedDtype(
                f"{self.filename} has dtype {array.dtype}, expected {np.dtype(expect)}"
            )

        self.debug(f"load::shape={array.shape}::dtype={array.dtype}")
        return array

    def peek_shape(self) -> tuple[int, ...]:
        """Read only the header and return the stored shape"""
        with open(self.filename, "rb") as t_file:
            start = t_file.read(len(NPY_MAGIC))
            t_file.seek(0)

            if start == NPY_MAGIC:
                try:
                    major, _ = np.lib.format.read_magic(t_file)
                    if major == 1:
                        header = np.lib.format.read_array_header_1_0(t_file)
                    else:
                        header = np.lib.format.read_array_header_2_0(t_file)
                except ValueError as exc:
                    raise MalformedHeader(f"{self.filename}: {exc}") from exc
                return tuple(header[0])

            data = t_file.read(PREAMBLE.size)
            if len(data) < PREAMBLE.size or data[:4] != MAGIC:
                raise MalformedHeader(f"{self.filename} has no tensor header")

            rank = PREAMBLE.unpack(data)[3]
            dims = t_file.read(rank * DIM.size)
            if len(dims) < rank * DIM.size:
                raise MalformedHeader(f"{self.filename} header announces {rank} dims")

            return tuple(DIM.unpack_from(dims, i * DIM.size)[0] for i in range(rank))

    def _parse_native(self, data: bytes) -> np.ndarray:
        if len(data) < PREAMBLE.size:
            raise MalformedHeader(f"{self.filename} is too short for a header")

        magic, version, code, rank = PREAMBLE.unpack_from(data, 0)
        if magic != MAGIC:
            raise MalformedHeader(f"{self.filename} has bad magic {magic!r}")

        if version != VERSION:
            raise MalformedHeader(f"{self.filename} has unknown version {version}")

        if code not in CODE_DTYPES:
            raise UnsupportedDtype(f"{self.filename} has unknown dtype code {code}")

        offset = PREAMBLE.size
        if len(data) < offset + rank * DIM.size:
            raise MalformedHeader(f"{self.filename} header announces {rank} dims")

        shape = tuple(
            DIM.unpack_from(data, offset + i * DIM.size)[0] for i in range(rank)
        )
        offset += rank * DIM.size

        dtype = CODE_DTYPES[code].newbyteorder("<")
        expected = math.prod(shape) * dtype.itemsize
        payload = len(data) - offset

        if payload < expected:
            raise TruncatedData(
                f"{self.filename} holds {payload} payload bytes, "
                + f"header needs {expected}"
            )

        if payload > expected:
            raise MalformedHeader(
                f"{self.filename} has {payload - expected} trailing bytes"
            )

        count = math.prod(shape)
        if count == 0:
            return np.zeros(shape, dtype=CODE_DTYPES[code])

        values = np.frombuffer(data, dtype=dtype, offset=offset, count=count)
        return values.astype(CODE_DTYPES[code]).reshape(shape)

    def _parse_npy(self, data: bytes) -> np.ndarray:
        try:
            array = np.load(io.BytesIO(data), allow_pickle=False)
        except ValueError as exc:
            # numpy reports short payloads and bad headers alike
            if "cannot reshape" in str(exc) or "EOF" in str(exc):
                raise TruncatedData(f"{self.filename}: {exc}") from exc
            raise MalformedHeader(f"{self.filename}: {exc}") from exc

        array = np.ascontiguousarray(array, dtype=array.dtype.newbyteorder("="))
        check_dtype(array)
        return array


def load_tensor(path: str, expect: np.dtype | str | None = None) -> np.ndarray:
    """Load a tensor file"""
    return TensorReader(filename=path).load(expect=expect)
