import os
import json
import tempfile
from unittest import TestCase
from unittest.mock import patch
import numpy as np
from src.utils.tensorio import FrameRef, load_manifest, load_tensor
from src.utils.noise import (
    NoiseConfig,
    NoiseInjector,
    DilationNoise,
    ErosionNoise,
    AffineTransform,
    PolygonNoise,
    sample_noise,
    inject_labels,
    inject,
)
from .shared_mocks import (
    PropertyInstanceMock,
    moving_box_labels,
    prototype_features,
    write_dataset,
)


def _tree_bytes(root: str) -> dict[str, bytes]:
    files = {}
    for folder, _, names in os.walk(root):
        for name in names:
            path = os.path.join(folder, name)
            with open(path, "rb") as f:
                files[os.path.relpath(path, root)] = f.read()
    return files


class TestSampleNoise(TestCase):

    def test_kinds(self):
        labels = np.zeros((8, 8), dtype=np.uint16)
        labels[2:5, 2:5] = 1
        cfg = NoiseConfig()
        rng = np.random.default_rng(0)
        kinds = {
            "dilation": DilationNoise,
            "erosion": ErosionNoise,
            "affine": AffineTransform,
            "polygon": PolygonNoise,
        }
        for kind, cls in kinds.items():
            self.assertIsInstance(sample_noise(kind, labels, 1, cfg, rng), cls)

    def test_radius_range(self):
        cfg = NoiseConfig(dilation_radius=(2, 3))
        rng = np.random.default_rng(0)
        radii = {
            sample_noise("dilation", np.zeros((2, 2)), 1, cfg, rng).radius
            for _ in range(100)
        }
        self.assertEqual(radii, {2, 3})

    def test_fail_kind(self):
        with self.assertRaises(ValueError):
            sample_noise("blur", np.zeros((2, 2)), 1, NoiseConfig(), None)


class TestInjectLabels(TestCase):

    def setUp(self):
        self.clean = moving_box_labels(
            12, 16, 24, class_id=2, top=4, left=2, box=(6, 8)
        )
        for labels in self.clean:
            labels[12:15, 18:22] = 1

    def test_one_noise_per_group_and_class(self):
        cfg = NoiseConfig(seed=3)
        _, log = inject_labels("v", self.clean, cfg)

        groups = sorted({tuple(entry["frames"]) for entry in log})
        self.assertEqual(groups[0][0], 0)
        self.assertEqual(groups[-1][1], 12)
        for group in groups:
            classes = sorted(e["class_id"] for e in log if tuple(e["frames"]) == group)
            self.assertEqual(classes, [1, 2])

    def test_same_noise_applied_to_whole_group(self):
        cfg = NoiseConfig(seed=5, noise_types=("dilation",))
        noisy, log = inject_labels("v", self.clean, cfg)

        for entry in log:
            self.assertEqual(entry["type"], "dilation")
            if entry["class_id"] != 2:
                continue
            # class 2 is dilated last, so it covers its clean pixels
            for index in range(*entry["frames"]):
                kept = noisy[index][self.clean[index] == 2]
                self.assertTrue((kept == 2).all())

    def test_seeded_by_video_id(self):
        cfg = NoiseConfig(seed=1)
        a, _ = inject_labels("v", self.clean, cfg)
        b, _ = inject_labels("v", self.clean, cfg)
        for x, y in zip(a, b):
            np.testing.assert_array_equal(x, y)

    def test_clean_maps_untouched(self):
        before = [labels.copy() for labels in self.clean]
        inject_labels("v", self.clean, NoiseConfig(seed=2))
        for x, y in zip(before, self.clean):
            np.testing.assert_array_equal(x, y)


class TestNoiseInjector(TestCase):

    def setUp(self):
        self.tmp = tempfile.TemporaryDirectory()
        videos = {}
        for v in range(10):
            labels = moving_box_labels(8, 16, 24, class_id=1, top=4, left=2, box=(6, 8))
            videos[f"v{v}"] = [
                {"features": prototype_features(y, 4), "labels": y} for y in labels
            ]
        self.manifest = load_manifest(
            write_dataset(os.path.join(self.tmp.name, "data"), videos)
        )

    def tearDown(self):
        self.tmp.cleanup()

    def _out(self, name: str) -> str:
        return os.path.join(self.tmp.name, name)

    @patch(
        "src.utils.noise.noise_injector.NoiseInjector.cfg",
        new_callable=PropertyInstanceMock,
    )
    def test_init_cfg(self, mock_cfg):
        cfg = NoiseConfig()
        injector = NoiseInjector(cfg)
        mock_cfg.assert_called_once_with(injector, cfg)

    def test_selection_and_variance(self):
        result = inject(self.manifest, NoiseConfig(alpha=0.5, seed=11), self._out("a"))
        self.assertEqual(len(result.selected), 5)

        noisy = load_manifest(os.path.join(self._out("a"), "manifest.json"))
        for video in noisy.videos:
            for frame in video.frames:
                name = f"{frame.frame_id}.tns"
                variance = load_tensor(
                    os.path.join(self._out("a"), "variance", video.video_id, name),
                    expect=np.uint8,
                )
                noisy_map = load_tensor(frame.label_path, expect=np.uint16)
                clean_map = load_tensor(frame.clean_label_path, expect=np.uint16)
                np.testing.assert_array_equal(variance, noisy_map != clean_map)
                if video.video_id not in result.selected:
                    self.assertFalse(variance.any())
                    self.assertEqual(frame.label_path, frame.clean_label_path)

        for video_id in result.selected:
            self.assertGreater(result.noisy_pixels[video_id], 0)

    def test_group_sizes(self):
        inject(self.manifest, NoiseConfig(alpha=1.0, seed=4), self._out("a"))
        summary = os.path.join(self._out("a"), "noise.json")
        with open(summary, "r", encoding="utf8") as f:
            document = json.load(f)

        self.assertEqual(len(document["selected"]), 10)
        for entries in document["noise"].values():
            groups = sorted({tuple(entry["frames"]) for entry in entries})
            for start, stop in groups[:-1]:
                self.assertTrue(3 <= stop - start <= 6)
            self.assertEqual(groups[-1][1], 8)

    def test_same_seed_same_bytes(self):
        inject(self.manifest, NoiseConfig(seed=7), self._out("a"))
        inject(self.manifest, NoiseConfig(seed=7, threads=4), self._out("b"))
        self.assertEqual(_tree_bytes(self._out("a")), _tree_bytes(self._out("b")))

    def test_other_seed_other_bytes(self):
        inject(self.manifest, NoiseConfig(seed=7), self._out("a"))
        inject(self.manifest, NoiseConfig(seed=8), self._out("b"))
        self.assertNotEqual(_tree_bytes(self._out("a")), _tree_bytes(self._out("b")))

    def test_clean_paths_kept(self):
        result = inject(self.manifest, NoiseConfig(alpha=0.0), self._out("a"))
        self.assertEqual(result.selected, [])
        ref = FrameRef("v0", "000")
        self.assertEqual(
            result.manifest.frame(ref).clean_label_path,
            self.manifest.frame(ref).label_path,
        )
