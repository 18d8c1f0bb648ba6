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
noise_config.py
"""
import math
import typing
from dataclasses import dataclass, field, asdict
from ..config import load_document, check_keys
from ..errors import ConfigError

NOISE_TYPES = ("dilation", "erosion", "affine", "polygon")


def _pair(name: str, value: typing.Any, kind: type) -> tuple:
    """Accept a scalar or a two-item list as a closed range"""
    if isinstance(value, (list, tuple)):
        if len(value) != 2:
            raise ConfigError(f"{name} must hold two values, got {value!r}")
        low, high = value
    else:
        low = high = value

    for item in (low, high):
        if isinstance(item, bool) or not isinstance(item, (int, float)):
            raise ConfigError(f"{name} must be numeric, got {value!r}")
        if kind is int and not float(item).is_integer():
            raise ConfigError(f"{name} must be integers, got {value!r}")

    if low > high:
        raise ConfigError(f"{name} lower bound exceeds upper bound: {value!r}")

    return (kind(low), kind(high))


def _non_negative(name: str, value: typing.Any):
    if (
        isinstance(value, bool)
        or not isinstance(value, (int, float))
        or not math.isfinite(value)
        or value < 0
    ):
        raise ConfigError(f"{name} must be a non-negative number, got {value!r}")


@dataclass(frozen=True)
class AffineParams:
    """Bounds of the random affine move of a class mask"""

    max_translate_px: float = 10.0
    max_rotate_deg: float = 10.0
    scale_range: tuple[float, float] = (0.9, 1.1)

    def __post_init__(self):
        _non_negative("affine.max_translate_px", self.max_translate_px)
        _non_negative("affine.max_rotate_deg", self.max_rotate_deg)
        scale = _pair("affine.scale_range", self.scale_range, float)
        if scale[0] <= 0:
            raise ConfigError(f"affine.scale_range must be positive, got {scale}")
        object.__setattr__(self, "scale_range", scale)


@dataclass(frozen=True)
class PolygonParams:
    """Vertex count range and size bound of noise polygons"""

    vertex_range: tuple[int, int] = (3, 8)
    # None: 15% of the label map diagonal
    max_extent_px: float | None = None

    def __post_init__(self):
        vertices = _pair("polygon.vertex_range", self.vertex_range, int)
        if vertices[0] < 3:
            raise ConfigError(f"polygon.vertex_range starts below 3: {vertices}")
        object.__setattr__(self, "vertex_range", vertices)

        if self.max_extent_px is not None:
            _non_negative("polygon.max_extent_px", self.max_extent_px)

    def extent_for(self, height: int, width: int) -> float:
        """Largest polygon diameter on a ``height`` x ``width`` map"""
        if self.max_extent_px is not None:
            return float(self.max_extent_px)
        return 0.15 * math.hypot(height, width)


# pylint: disable=too-many-instance-attributes
@dataclass(frozen=True)
class NoiseConfig:
    """Settings of a noise injection run"""

    alpha: float = 0.5
    group_min: int = 3
    group_max: int = 6
    seed: int = 0
    dilation_radius: tuple[int, int] = (2, 6)
    erosion_radius: tuple[int, int] = (2, 6)
    noise_types: tuple[str, ...] = NOISE_TYPES
    threads: int = 1
    affine: AffineParams = field(default_factory=AffineParams)
    polygon: PolygonParams = field(default_factory=PolygonParams)

    def __post_init__(self):
        _non_negative("alpha", self.alpha)
        if self.alpha > 1:
            raise ConfigError(f"alpha must lie in [0, 1], got {self.alpha}")

        for name in ("group_min", "group_max", "threads"):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, int) or value < 1:
                raise ConfigError(f"{name} must be a positive integer, got {value!r}")

        if self.group_min > self.group_max:
            raise ConfigError(
                f"group_min ({self.group_min}) exceeds group_max ({self.group_max})"
            )

        seed = self.seed
        if isinstance(seed, bool) or not isinstance(seed, int) or seed < 0:
            raise ConfigError(f"seed must be a non-negative integer, got {self.seed!r}")

        for name in ("dilation_radius", "erosion_radius"):
            radius = _pair(name, getattr(self, name), int)
            if radius[0] < 0:
                raise ConfigError(f"{name} must be non-negative, got {radius}")
            object.__setattr__(self, name, radius)

        types = tuple(self.noise_types)
        unknown = [kind for kind in types if kind not in NOISE_TYPES]
        if not types or unknown:
            raise ConfigError(
                f"noise_types must be a non-empty subset of {NOISE_TYPES}"
            )
        object.__setattr__(self, "noise_types", types)

        if isinstance(self.affine, dict):
            object.__setattr__(self, "affine", _nested(AffineParams, self.affine))
        if isinstance(self.polygon, dict):
            object.__setattr__(self, "polygon", _nested(PolygonParams, self.polygon))

    def to_dict(self) -> dict[str, typing.Any]:
        """Serializable form"""
        return asdict(self)


def _nested(cls: type, document: dict[str, typing.Any]):
    check_keys(cls, document)
    return cls(**document)


def load_noise_config(path: str | None = None, **overrides) -> NoiseConfig:
    """
    Defaults, then the TOML/JSON file at ``path`` (``[affine]`` and
    ``[polygon]`` tables for the nested settings), then ``overrides``
    that are not None
    """
    document = load_document(path) if path is not None else {}
    values = {**document}
    values.update({k: v for k, v in overrides.items() if v is not None})
    check_keys(NoiseConfig, values)

    for name in ("affine", "polygon"):
        if name in values and not isinstance(values[name], dict):
            raise ConfigError(f"{name} must be a table")

    return NoiseConfig(**values)
