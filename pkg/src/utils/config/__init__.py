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
config.py

Load TOML or JSON configuration documents and build
dataclass configurations from them
"""

import os
import sys
import json
import dataclasses
import typing
from ..errors import ConfigError

if sys.version_info.minor <= 10:
    # pylint: disable=import-outside-toplevel
    from tomli import loads as load_toml
    from tomli import TOMLDecodeError
else:
    # pylint: disable=import-outside-toplevel,import-error
    from tomllib import loads as load_toml
    from tomllib import TOMLDecodeError


def load_document(path: str) -> dict[str, typing.Any]:
    """Read a .toml or .json file into a dict"""
    if not os.path.exists(path):
        raise ConfigError(f"Config file {path} do not exist")

    _, ext = os.path.splitext(path)
    with open(path, "r", encoding="utf8") as config_file:
        data = config_file.read()

    try:
        if ext == ".toml":
            document = load_toml(data)
        elif ext == ".json":
            document = json.loads(data)
        else:
            raise ConfigError(f"Unsupported config format: {ext}")

    except (TOMLDecodeError, json.JSONDecodeError) as exc:
        raise ConfigError(f"{path} is not a valid {ext[1:]} file: {exc}") from exc

    if not isinstance(document, dict):
        raise ConfigError(f"{path} must hold a table at top level")

    return document


def check_keys(cls: type, document: dict[str, typing.Any]):
    """Refuse keys that are not fields of the dataclass ``cls``"""
    names = {field.name for field in dataclasses.fields(cls)}
    unknown = sorted(set(document) - names)
    if unknown:
        raise ConfigError(f"Unknown {cls.__name__} keys: {', '.join(unknown)}")
