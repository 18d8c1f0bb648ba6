import io
import os
import json
import tempfile
from unittest import TestCase
from unittest.mock import patch
from src.cli import main
from src.utils.tensorio import load_manifest
from tests.shared_mocks import prototype_dataset


def _summary(out: str) -> dict:
    with open(os.path.join(out, "noise.json"), "r", encoding="utf8") as f:
        return json.load(f)


class TestInjectNoiseCommand(TestCase):

    def setUp(self):
        self.tmp = tempfile.TemporaryDirectory()
        self.manifest = prototype_dataset(
            os.path.join(self.tmp.name, "data"),
            n_videos=4,
            n_frames=5,
            height=32,
            width=40,
            predictions=False,
        )

    def tearDown(self):
        self.tmp.cleanup()

    def _inject(self, out: str, *argv: str) -> int:
        return main(["inject-noise", "--manifest", self.manifest, "--out", out, *argv])

    @patch("sys.stdout", new_callable=io.StringIO)
    def test_inject(self, mock_stdout):
        out = os.path.join(self.tmp.name, "noisy")
        self.assertEqual(self._inject(out, "--alpha", "0.5", "--seed", "1"), 0)

        summary = _summary(out)
        self.assertEqual(len(summary["selected"]), 2)
        self.assertEqual(sorted(summary["noise"]), sorted(summary["selected"]))

        manifest = load_manifest(os.path.join(out, "manifest.json"))
        self.assertEqual(len(manifest.videos), 4)
        for video in manifest.videos:
            for frame in video.frames:
                self.assertIsNotNone(frame.clean_label_path)
                if video.video_id not in summary["selected"]:
                    self.assertEqual(frame.label_path, frame.clean_label_path)
                    self.assertEqual(summary["noisy_pixels"][video.video_id], 0)

        self.assertIn("noisy_pixels", mock_stdout.getvalue())

    @patch("sys.stdout", new_callable=io.StringIO)
    def test_noisy_manifest_reinjects_from_clean(self, _):
        once = os.path.join(self.tmp.name, "once")
        twice = os.path.join(self.tmp.name, "twice")
        self.assertEqual(self._inject(once, "--alpha", "1.0"), 0)

        self.manifest = os.path.join(once, "manifest.json")
        self.assertEqual(self._inject(twice, "--alpha", "1.0"), 0)

        self.assertEqual(_summary(once), _summary(twice))

    @patch("sys.stdout", new_callable=io.StringIO)
    def test_fail_alpha(self, _):
        out = os.path.join(self.tmp.name, "noisy")
        self.assertEqual(self._inject(out, "--alpha", "1.5"), 1)

    @patch("sys.stdout", new_callable=io.StringIO)
    def test_fail_config(self, _):
        config = os.path.join(self.tmp.name, "noise.toml")
        with open(config, "w", encoding="utf8") as f:
            f.write('noise_types = ["blur"]\n')
        out = os.path.join(self.tmp.name, "noisy")
        self.assertEqual(self._inject(out, "--config", config), 1)
