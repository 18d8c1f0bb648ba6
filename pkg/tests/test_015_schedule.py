from unittest import TestCase
from src.utils.errors import InvalidSchedule
from src.utils.rectifier import StageFlags, StageSchedule, stage_for_epoch


class TestSchedule(TestCase):

    def test_defaults(self):
        schedule = StageSchedule()
        self.assertEqual(
            (schedule.video_epoch, schedule.image_epoch, schedule.pixel_epoch),
            (16, 24, 40),
        )

    def test_flags_change_only_at_stage_epochs(self):
        schedule = StageSchedule()
        changes = []
        previous = stage_for_epoch(1, schedule)
        self.assertEqual(previous, StageFlags())

        for epoch in range(2, 101):
            flags = stage_for_epoch(epoch, schedule)
            if flags != previous:
                changes.append(epoch)
            previous = flags

        self.assertEqual(changes, [16, 24, 40])
        self.assertEqual(
            stage_for_epoch(100, schedule),
            StageFlags(video_on=True, image_on=True, pixel_on=True),
        )

    def test_stage_boundaries(self):
        schedule = StageSchedule()
        self.assertEqual(stage_for_epoch(15, schedule), StageFlags())
        self.assertEqual(stage_for_epoch(16, schedule), StageFlags(video_on=True))
        self.assertEqual(
            stage_for_epoch(24, schedule), StageFlags(video_on=True, image_on=True)
        )
        self.assertTrue(stage_for_epoch(40, schedule).pixel_on)

    def test_equal_epochs(self):
        schedule = StageSchedule(video_epoch=5, image_epoch=5, pixel_epoch=5)
        self.assertEqual(stage_for_epoch(4, schedule), StageFlags())
        self.assertEqual(
            stage_for_epoch(5, schedule),
            StageFlags(video_on=True, image_on=True, pixel_on=True),
        )

    def test_fail_non_monotone(self):
        with self.assertRaises(InvalidSchedule):
            StageSchedule(video_epoch=24, image_epoch=16, pixel_epoch=40)
        with self.assertRaises(InvalidSchedule):
            StageSchedule(video_epoch=0, image_epoch=16, pixel_epoch=40)

    def test_fail_epoch(self):
        with self.assertRaises(ValueError) as exc_info:
            stage_for_epoch(0, StageSchedule())

        self.assertEqual(str(exc_info.exception), "Epochs are 1-based, got 0")

    def test_fail_flags_out_of_order(self):
        with self.assertRaises(InvalidSchedule):
            StageFlags(pixel_on=True)
        with self.assertRaises(InvalidSchedule):
            StageFlags(video_on=False, image_on=True)

    def test_flags_to_dict(self):
        self.assertEqual(
            StageFlags(video_on=True).to_dict(),
            {"video_on": True, "image_on": False, "pixel_on": False},
        )
