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
trigger.py

Base class to be used accross project
"""
import os

# kivy must not steal the command line nor write log files
os.environ.setdefault("KIVY_NO_ARGS", "1")
os.environ.setdefault("KIVY_NO_FILELOG", "1")

# pylint: disable=wrong-import-position
from kivy.logger import Logger, LOG_LEVELS


def set_log_level(level: str | None = None):
    """
    Set the project log level from the given name or, when
    omitted, from the LOGLEVEL environment variable (default 'info')
    """
    if level is None:
        level = os.environ.get("LOGLEVEL", "info")

    if level not in LOG_LEVELS:
        raise ValueError(f"Invalid log level: {level}")

    Logger.setLevel(LOG_LEVELS[level])


class Trigger:
    """
    Trigger

    Class to be (co)inherited in any class of the project.
    All actions will be logged with the name of the concrete class.
    """

    def _title(self) -> str:
        return self.__class__.__name__

    def info(self, msg: str):
        """Logger with level 'info'"""
        Logger.info("%s: %s", self._title(), msg)

    def debug(self, msg: str):
        """Logger with level 'debug'"""
        Logger.debug("%s: %s", self._title(), msg)

    def warning(self, msg: str):
        """Logger with level 'warning'"""
        Logger.warning("%s: %s", self._title(), msg)

    def error(self, msg: str):
        """Logger with level 'error'"""
        Logger.error("%s: %s", self._title(), msg)

    def critical(self, msg: str):
        """Logger with level 'critical'"""
        Logger.critical("%s: %s", self._title(), msg)
