import io
import os
import json
import tempfile
from unittest import TestCase
from unittest.mock import patch
from src.cli import main
from tests.shared_mocks import prototype_dataset


class TestThresholdsCommand(TestCase):

    def setUp(self):
        self.tmp = tempfile.TemporaryDirectory()
        manifest = prototype_dataset(
            os.path.join(self.tmp.name, "data"),
            n_videos=3,
            n_frames=3,
            height=16,
            width=20,
        )
        self.affinity = os.path.join(self.tmp.name, "affinity")
        with patch("sys.stdout", new_callable=io.StringIO):
            code = main(["affinity", "--manifest", manifest, "--out", self.affinity])
        self.assertEqual(code, 0)
        self.summary = os.path.join(self.affinity, "summary.json")

    def tearDown(self):
        self.tmp.cleanup()

    @patch("sys.stdout", new_callable=io.StringIO)
    def test_thresholds(self, mock_stdout):
        out = os.path.join(self.tmp.name, "out")
        code = main(["thresholds", "--stats", self.summary, "--out", out])
        self.assertEqual(code, 0)

        with open(os.path.join(out, "thresholds.json"), "r", encoding="utf8") as f:
            document = json.load(f)

        with open(self.summary, "r", encoding="utf8") as f:
            frames = json.load(f)["frames"]
        mean_ap = sum(f["stats"]["mean_ap"] for f in frames) / len(frames)
        self.assertAlmostEqual(document["thresholds"]["t_p"], mean_ap, places=12)

        videos = document["videos"]
        self.assertEqual(
            [v["video_id"] for v in videos], ["video0", "video1", "video2"]
        )
        self.assertEqual(sorted(v["rank"] for v in videos), [1, 2, 3])
        for video in videos:
            self.assertTrue(0.4 <= video["lambda_v"] <= 1.0)
        self.assertIn("t_p=", mock_stdout.getvalue())

    @patch("sys.stdout", new_callable=io.StringIO)
    def test_many_summaries(self, _):
        out = os.path.join(self.tmp.name, "out")
        code = main(["thresholds", "--stats", self.summary, self.summary, "--out", out])
        self.assertEqual(code, 0)

        with open(os.path.join(out, "thresholds.json"), "r", encoding="utf8") as f:
            document = json.load(f)
        self.assertEqual(len(document["videos"]), 3)

    @patch("sys.stdout", new_callable=io.StringIO)
    def test_without_out(self, mock_stdout):
        self.assertEqual(main(["thresholds", "--stats", self.summary]), 0)
        self.assertIn("lambda_v", mock_stdout.getvalue())

    def test_fail_missing_summary(self):
        missing = os.path.join(self.tmp.name, "missing.json")
        self.assertEqual(main(["thresholds", "--stats", missing]), 1)

    def test_fail_not_a_summary(self):
        path = os.path.join(self.tmp.name, "bad.json")
        with open(path, "w", encoding="utf8") as f:
            f.write('{"videos": []}')
        self.assertEqual(main(["thresholds", "--stats", path]), 1)

    def test_fail_invalid_json(self):
        path = os.path.join(self.tmp.name, "bad.json")
        with open(path, "w", encoding="utf8") as f:
            f.write("{")
        self.assertEqual(main(["thresholds", "--stats", path]), 1)
