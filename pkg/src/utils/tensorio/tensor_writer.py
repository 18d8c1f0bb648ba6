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
tensor_writer.py
"""
import os
import numpy as np
from ..errors import IoFailure
from .base_tensor_file import (
    BaseTensorFile,
    MAGIC,
    VERSION,
    PREAMBLE,
    DIM,
    DTYPE_CODES,
    check_dtype,
    check_finite,
)


class TensorWriter(BaseTensorFile):
    """Write tensors in the native container format"""

    @staticmethod
    def encode(array: np.ndarray) -> bytes:
        """Serialize ``array`` into container bytes"""
        check_dtype(array)
        header = PREAMBLE.pack(MAGIC, VERSION, DTYPE_CODES[array.dtype], array.ndim)
        dims = b"".join(DIM.pack(dim) for dim in array.shape)
        payload = np.ascontiguousarray(array, dtype=array.dtype.newbyteorder("<"))
        return header + dims + payload.tobytes(order="C")

    def save(self, array: np.ndarray):
        """Write ``array`` to :attr:`filename`, creating parent folders"""
        check_dtype(array)
        check_finite(array, self.filename)
        data = TensorWriter.encode(array)

        try:
            dirname = os.path.dirname(self.filename)
            if dirname:
                os.makedirs(dirname, exist_ok=True)

            with open(self.filename, "wb") as t_file:
                t_file.write(data)

        except OSError as exc:
            raise IoFailure(f"Cannot write {self.filename}: {exc}") from exc

        self.debug(f"save::{self.filename}::shape={array.shape}::dtype={array.dtype}")


def save_tensor(array: np.ndarray, path: str):
    """Save a tensor file"""
    TensorWriter(filename=path).save(array)
