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
manifest.py

Dataset manifest: ordered videos, each one an ordered list of frames
(temporal order) pointing to feature, label and prediction tensors.
"""
import os
import json
import typing
from dataclasses import dataclass, field
from ..trigger import Trigger
from ..errors import ParseError, MissingFile, DuplicateId, IoFailure

PATH_FIELDS = ("feature_path", "label_path", "prediction_path", "clean_label_path")


@dataclass
class FrameEntry:
    """One frame of a video"""

    frame_id: str
    feature_path: str
    label_path: str
    prediction_path: str | None = None
    clean_label_path: str | None = None


@dataclass
class VideoEntry:
    """One video, frames in temporal order"""

    video_id: str
    frames: list[FrameEntry] = field(default_factory=list)


@dataclass(frozen=True)
class FrameRef:
    """Reference to a frame by its identifiers"""

    video_id: str
    frame_id: str

    def __str__(self) -> str:
        return f"{self.video_id}/{self.frame_id}"


@dataclass
class DatasetManifest:
    """Ordered videos of a dataset"""

    videos: list[VideoEntry] = field(default_factory=list)

    def refs(self) -> list[FrameRef]:
        """Every frame reference, videos then frames in manifest order"""
        return [
            FrameRef(video.video_id, frame.frame_id)
            for video in self.videos
            for frame in video.frames
        ]

    def video(self, video_id: str) -> VideoEntry:
        """Find a video by id"""
        for video in self.videos:
            if video.video_id == video_id:
                return video
        raise KeyError(f"Unknown video: {video_id}")

    def locate(self, ref: FrameRef) -> tuple[VideoEntry, int]:
        """Find the video holding ``ref`` and the frame position in it"""
        video = self.video(ref.video_id)
        for index, frame in enumerate(video.frames):
            if frame.frame_id == ref.frame_id:
                return video, index
        raise KeyError(f"Unknown frame: {ref}")

    def frame(self, ref: FrameRef) -> FrameEntry:
        """Find a frame by reference"""
        video, index = self.locate(ref)
        return video.frames[index]

    def frame_count(self) -> int:
        """Total number of frames"""
        return sum(len(video.frames) for video in self.videos)

    def has_predictions(self) -> bool:
        """True when every frame has a prediction tensor"""
        return all(
            frame.prediction_path is not None
            for video in self.videos
            for frame in video.frames
        )

    def to_dict(self, relative_to: str | None = None) -> dict[str, typing.Any]:
        """Serializable document, paths relative to ``relative_to`` if given"""

        def _path(value: str | None) -> str | None:
            if value is None or relative_to is None:
                return value
            return os.path.relpath(value, relative_to).replace(os.sep, "/")

        videos = []
        for video in self.videos:
            frames = []
            for frame in video.frames:
                entry = {"frame_id": frame.frame_id}
                for name in PATH_FIELDS:
                    value = getattr(frame, name)
                    if value is not None:
                        entry[name] = _path(value)
                frames.append(entry)
            videos.append({"video_id": video.video_id, "frames": frames})

        return {"videos": videos}


class ManifestLoader(Trigger):
    """Load, validate and save dataset manifests (JSON)"""

    def __init__(self, filename: str):
        super().__init__()
        self.filename = filename

    @property
    def filename(self) -> str:
        """Getter for manifest filename"""
        self.debug(f"filename::getter={self._filename}")
        return self._filename

    @filename.setter
    def filename(self, value: str):
        """Setter for manifest filename"""
        self.debug(f"filename::setter={value}")
        self._filename = value

    @property
    def root(self) -> str:
        """Folder against which relative paths are resolved"""
        return os.path.dirname(os.path.abspath(self.filename))

    def load(self, check_files: bool = True) -> DatasetManifest:
        """Parse and validate the manifest"""
        if not os.path.exists(self.filename):
            raise MissingFile(f"File {self.filename} do not exist")

        self.debug(f"load::{self.filename}")
        with open(self.filename, "r", encoding="utf8") as m_file:
            try:
                document = json.load(m_file)
            except json.JSONDecodeError as exc:
                raise ParseError(f"{self.filename} is not valid json: {exc}") from exc

        manifest = self.parse(document)
        ManifestLoader.validate(manifest, check_files=check_files)
        self.info(
            f"Loaded {len(manifest.videos)} videos, "
            + f"{manifest.frame_count()} frames from {self.filename}"
        )
        return manifest

    def parse(self, document: typing.Any) -> DatasetManifest:
        """Build a manifest from a decoded JSON document"""
        if not isinstance(document, dict) or not isinstance(
            document.get("videos"), list
        ):
            raise ParseError(f"{self.filename} must hold a 'videos' list")

        videos = []
        for v_doc in document["videos"]:
            if not isinstance(v_doc, dict) or not isinstance(
                v_doc.get("frames"), list
            ):
                raise ParseError(f"Invalid video entry: {v_doc}")

            try:
                video = VideoEntry(video_id=str(v_doc["video_id"]))
                for f_doc in v_doc["frames"]:
                    paths = {
                        name: self._resolve(f_doc[name])
                        for name in PATH_FIELDS
                        if f_doc.get(name) is not None
                    }
                    video.frames.append(
                        FrameEntry(frame_id=str(f_doc["frame_id"]), **paths)
                    )
            except (KeyError, TypeError) as exc:
                raise ParseError(f"Invalid entry in {self.filename}: {exc}") from exc

            videos.append(video)

        return DatasetManifest(videos=videos)

    def _resolve(self, path: str) -> str:
        if not isinstance(path, str):
            raise TypeError(f"path must be a string, got {path!r}")
        if os.path.isabs(path):
            return path
        return os.path.normpath(os.path.join(self.root, path))

    @staticmethod
    def validate(manifest: DatasetManifest, check_files: bool = True):
        """Check id uniqueness, non-empty videos and file existence"""
        video_ids = set()
        for video in manifest.videos:
            if video.video_id in video_ids:
                raise DuplicateId(f"Duplicate video_id: {video.video_id}")
            video_ids.add(video.video_id)

            if len(video.frames) == 0:
                raise ParseError(f"Video {video.video_id} has no frames")

            frame_ids = set()
            for frame in video.frames:
                if frame.frame_id in frame_ids:
                    raise DuplicateId(
                        f"Duplicate frame_id {frame.frame_id} in video {video.video_id}"
                    )
                frame_ids.add(frame.frame_id)

                if not check_files:
                    continue

                for name in PATH_FIELDS:
                    path = getattr(frame, name)
                    if path is not None and not os.path.exists(path):
                        raise MissingFile(f"File {path} do not exist")

    def save(self, manifest: DatasetManifest):
        """Write the manifest with paths relative to its folder"""
        try:
            os.makedirs(self.root, exist_ok=True)
            with open(self.filename, "w", encoding="utf8") as m_file:
                json.dump(manifest.to_dict(relative_to=self.root), m_file, indent=2)
                m_file.write("\n")
        except OSError as exc:
            raise IoFailure(f"Cannot write {self.filename}: {exc}") from exc

        self.debug(f"save::{self.filename}")


def load_manifest(path: str, check_files: bool = True) -> DatasetManifest:
    """Load and validate a manifest"""
    return ManifestLoader(filename=path).load(check_files=check_files)


def save_manifest(manifest: DatasetManifest, path: str):
    """Save a manifest"""
    ManifestLoader(filename=path).save(manifest)
