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
errors.py

Exceptions raised by the rectifier. Bad inputs are ValueError,
environment failures are RuntimeError, all of them are RectifierError.
"""


class RectifierError(Exception):
    """Root of every error raised by the project"""


# tensor-io
class MalformedHeader(RectifierError, ValueError):
    """Tensor file header cannot be parsed"""


class TruncatedData(RectifierError, ValueError):
    """Tensor payload shorter than its header announces"""


class UnsupportedDtype(RectifierError, ValueError):
    """Tensor dtype is not float32, uint16 or uint8"""


class RejectedNonFinite(RectifierError, ValueError):
    """Float tensor holds NaN or Inf"""


class IoFailure(RectifierError, RuntimeError):
    """Underlying filesystem operation failed"""


class ParseError(RectifierError, ValueError):
    """Manifest document cannot be parsed"""


class MissingFile(RectifierError, ValueError):
    """A referenced file does not exist"""


class DuplicateId(RectifierError, ValueError):
    """Video or frame identifier used twice"""


# affinity-core
class ShapeMismatch(RectifierError, ValueError):
    """Arrays that must agree in shape do not"""


class InvalidTargetSize(RectifierError, ValueError):
    """Resampling target is zero or goes the wrong way"""


# rectifier
class NoDefinedEntries(RectifierError, ValueError):
    """Affinity map has no defined entry to average"""


class EmptyDataset(RectifierError, ValueError):
    """Nothing to reduce over"""


class EmptyVideoList(RectifierError, ValueError):
    """Video weights requested for zero videos"""


class InvalidSchedule(RectifierError, ValueError):
    """Stage epochs are not monotone"""


class InvalidPrediction(RectifierError, ValueError):
    """Probability map is negative or does not sum to one"""


class MissingPredictions(RectifierError, RuntimeError):
    """Pixel stage enabled without prediction tensors"""


# metrics
class NoEvaluatedClasses(RectifierError, ValueError):
    """Every class was excluded from the mean"""


# configuration
class ConfigError(RectifierError, ValueError):
    """Configuration file or value is invalid"""
