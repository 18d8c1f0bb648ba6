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
rng.py

Named random substreams. Every random draw of the project comes
from ``substream(seed, *names)``: a Philox counter-based generator
keyed by the master seed and by the names, so the numbers one
consumer sees never depend on how many numbers another consumed
nor on the order workers run.
"""
import hashlib
import numpy as np


def name_key(name: str) -> int:
    """First 4 bytes (big-endian) of the SHA-256 of ``name``"""
    digest = hashlib.sha256(str(name).encode("utf8")).digest()
    return int.from_bytes(digest[:4], "big")


def substream(seed: int, *names: str) -> np.random.Generator:
    """Generator for the stream ``names`` under ``seed``"""
    if seed < 0:
        raise ValueError(f"Seed must be a non-negative integer: {seed}")

    sequence = np.random.SeedSequence(
        entropy=seed, spawn_key=tuple(name_key(name) for name in names)
    )
    return np.random.Generator(np.random.Philox(sequence))
