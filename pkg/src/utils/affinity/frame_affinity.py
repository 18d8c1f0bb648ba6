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
frame_affinity.py
"""
import threading
import numpy as np
from ..trigger import Trigger
from ..constants import VALID_REFERENCES
from ..errors import ShapeMismatch
from ..rng import substream
from ..tensorio import DatasetManifest, FrameRef, TensorReader, load_tensor
from .resample import downsample_labels
from .kernel import affinity_fast
from .affinity_pair import AffinityPair


class FrameAffinity(Trigger):
    """
    Affinity of a frame against its reference frame, at label
    resolution. The reference is chosen by ``reference``:

    - adjacent: previous frame; next frame for the first frame
      of a video; the frame itself in single-frame videos
    - same: the frame itself
    - any: a frame drawn uniformly among the dataset frames that
      share both its feature and label shapes (itself when there is
      none)
    """

    def __init__(
        self, manifest: DatasetManifest, reference: str = "adjacent", seed: int = 0
    ):
        super().__init__()
        self.manifest = manifest
        self.reference = reference
        self.seed = seed
        self._shapes: dict[FrameRef, tuple[tuple[int, ...], ...]] | None = None
        self._lock = threading.Lock()

    @property
    def reference(self) -> str:
        """Getter for reference policy"""
        self.debug(f"reference::getter={self._reference}")
        return self._reference

    @reference.setter
    def reference(self, value: str):
        """Setter for reference policy"""
        if value not in VALID_REFERENCES:
            raise ValueError(f"Invalid reference policy: {value}")
        self.debug(f"reference::setter={value}")
        self._reference = value

    @property
    def seed(self) -> int:
        """Getter for seed"""
        self.debug(f"seed::getter={self._seed}")
        return self._seed

    @seed.setter
    def seed(self, value: int):
        """Setter for seed"""
        if value < 0:
            raise ValueError(f"Invalid seed: {value}")
        self.debug(f"seed::setter={value}")
        self._seed = value

    def _frame_shapes(self) -> dict[FrameRef, tuple[tuple[int, ...], ...]]:
        """Feature and label shape of every frame, headers only"""
        with self._lock:
            if self._shapes is None:
                self._shapes = {}
                for ref in self.manifest.refs():
                    entry = self.manifest.frame(ref)
                    self._shapes[ref] = (
                        TensorReader(filename=entry.feature_path).peek_shape(),
                        TensorReader(filename=entry.label_path).peek_shape(),
                    )
        return self._shapes

    def reference_for(self, ref: FrameRef) -> FrameRef:
        """Frame paired with ``ref``"""
        if self.reference == "same":
            return ref

        if self.reference == "adjacent":
            video, index = self.manifest.locate(ref)
            if index > 0:
                index -= 1
            elif len(video.frames) > 1:
                index += 1
            return FrameRef(video.video_id, video.frames[index].frame_id)

        shapes = self._frame_shapes()
        candidates = [
            other
            for other, shape in shapes.items()
            if other != ref and shape == shapes[ref]
        ]
        if not candidates:
            return ref

        rng = substream(self.seed, "reference", ref.video_id, ref.frame_id)
        return candidates[int(rng.integers(len(candidates)))]

    def compute(self, ref: FrameRef) -> AffinityPair:
        """Affinity pair of ``ref`` upsampled to its label size"""
        other = self.reference_for(ref)
        self.debug(f"compute::{ref}::reference={other}")

        entry = self.manifest.frame(ref)
        f_t = load_tensor(entry.feature_path, expect=np.float32)
        y_t = load_tensor(entry.label_path, expect=np.uint16)

        if other == ref:
            f_ref, y_ref = f_t, y_t
        else:
            other_entry = self.manifest.frame(other)
            f_ref = load_tensor(other_entry.feature_path, expect=np.float32)
            y_ref = load_tensor(other_entry.label_path, expect=np.uint16)

        if f_ref.shape != f_t.shape:
            raise ShapeMismatch(
                f"{ref} features {f_t.shape} differ from {other} features {f_ref.shape}"
            )

        if y_t.ndim != 2 or y_ref.shape != y_t.shape:
            raise ShapeMismatch(
                f"{ref} labels {y_t.shape} differ from {other} labels {y_ref.shape}"
            )

        height, width = f_t.shape[:2]
        pair = affinity_fast(
            f_t,
            f_ref,
            downsample_labels(y_t, height, width),
            downsample_labels(y_ref, height, width),
        )
        return pair.upsample(*y_t.shape)


def compute_frame_affinity(
    frame: FrameRef,
    manifest: DatasetManifest,
    reference: str = "adjacent",
    seed: int = 0,
) -> AffinityPair:
    """Affinity pair of one frame"""
    return FrameAffinity(manifest, reference=reference, seed=seed).compute(frame)
