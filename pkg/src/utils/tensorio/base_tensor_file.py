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
base_tensor_file.py

Tensor container layout (little-endian):

    offset 0   magic    4 bytes  b"ARTN"
    offset 4   version  u16      1
    offset 6   dtype    u8       1=float32, 2=uint16, 3=uint8
    offset 7   rank     u8
    offset 8   dims     rank x u64
    then       payload  row-major values
"""

import struct
import numpy as np
from ..trigger import Trigger
from ..errors import UnsupportedDtype, RejectedNonFinite

MAGIC = b"ARTN"
VERSION = 1
NPY_MAGIC = b"\x93NUMPY"

PREAMBLE = struct.Struct("<4sHBB")
DIM = struct.Struct("<Q")

DTYPE_CODES = {
    np.dtype("float32"): 1,
    np.dtype("uint16"): 2,
    np.dtype("uint8"): 3,
}
CODE_DTYPES = {code: dtype for dtype, code in DTYPE_CODES.items()}


def check_dtype(array: np.ndarray):
    """Accept only float32, uint16 and uint8 arrays"""
    if array.dtype not in DTYPE_CODES:
        raise UnsupportedDtype(f"Unsupported dtype: {array.dtype}")


def check_finite(array: np.ndarray, filename: str):
    """Refuse float tensors holding NaN or Inf"""
    if array.dtype.kind == "f" and not np.isfinite(array).all():
        raise RejectedNonFinite(f"{filename} holds non-finite values")


class BaseTensorFile(Trigger):
    """Base class for tensor readers and writers"""

    def __init__(self, filename: str):
        super().__init__()
        self.filename = filename

    @property
    def filename(self) -> str:
        """Getter for filename"""
        self.debug(f"filename::getter={self._filename}")
        return self._filename

    @filename.setter
    def filename(self, value: str):
        """Setter for filename"""
        if not value:
            raise ValueError("Empty tensor filename")
        self.debug(f"filename::setter={value}")
        self._filename = value
