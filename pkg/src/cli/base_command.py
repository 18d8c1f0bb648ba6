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
base_command.py
"""
import os
import json
import typing
import argparse
from ..utils.trigger import Trigger
from ..utils.errors import RectifierError, IoFailure
from ..utils.tensorio import DatasetManifest, load_manifest


class BaseCommand(Trigger):
    """
    Base of every subcommand. Subclasses set ``name`` and ``help``,
    declare their flags in ``add_arguments`` and do their work in
    ``run``; ``execute`` turns failures into exit code 1.
    """

    name: str = ""
    help: str = ""

    def __init__(self, args: argparse.Namespace):
        super().__init__()
        self.args = args

    @classmethod
    def add_arguments(cls, parser: argparse.ArgumentParser):
        """Flags specific to the subcommand"""

    def run(self):
        """Do the work, raising on failure"""
        raise NotImplementedError(f"{self.__class__.__name__} must implement run")

    def execute(self) -> int:
        """Exit code: 0 when every output was written"""
        try:
            self.run()
        except (RectifierError, ValueError, OSError) as exc:
            self.error(f"{exc.__class__.__name__}: {exc}")
            return 1
        return 0

    def require(self, name: str) -> typing.Any:
        """Value of flag ``name``, which this subcommand cannot do without"""
        value = getattr(self.args, name, None)
        if value is None:
            flag = "--" + name.replace("_", "-")
            raise ValueError(f"{self.name} needs {flag}")
        return value

    def manifest(self) -> DatasetManifest:
        """Manifest given by --manifest"""
        return load_manifest(self.require("manifest"))

    def out_dir(self) -> str:
        """Output folder given by --out, created if missing"""
        out = self.require("out")
        try:
            os.makedirs(out, exist_ok=True)
        except OSError as exc:
            raise IoFailure(f"Cannot create {out}: {exc}") from exc
        return out

    def write_json(self, document: typing.Any, path: str):
        """Sorted, indented JSON with a trailing newline"""
        try:
            parent = os.path.dirname(path)
            if parent:
                os.makedirs(parent, exist_ok=True)
            with open(path, "w", encoding="utf8") as j_file:
                json.dump(document, j_file, indent=2, sort_keys=True)
                j_file.write("\n")
        except OSError as exc:
            raise IoFailure(f"Cannot write {path}: {exc}") from exc
        self.debug(f"write_json::{path}")

    @staticmethod
    def print_table(
        header: typing.Sequence[str], rows: typing.Iterable[typing.Sequence]
    ):
        """Left-aligned text table on stdout"""
        text_rows = [[str(cell) for cell in row] for row in rows]
        widths = [len(title) for title in header]
        for row in text_rows:
            widths = [max(width, len(cell)) for width, cell in zip(widths, row)]

        for row in [list(header), *text_rows]:
            print("  ".join(cell.ljust(width) for cell, width in zip(row, widths)))
