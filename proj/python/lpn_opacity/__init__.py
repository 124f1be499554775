# Copyright 2026 The lpn-opacity Authors
#
#    Licensed under the Apache License, Version 2.0 (the "License");
#    you may not use this file except in compliance with the License.
#    You may obtain a copy of the License at
#
#        http://www.apache.org/licenses/LICENSE-2.0
#
#    Unless required by applicable law or agreed to in writing, software
#    distributed under the License is distributed on an "AS IS" BASIS,
#    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
#    See the License for the specific language governing permissions and
#    limitations under the License.

"""Opacity verification for bounded labeled Petri nets.

Reports are the same JSON documents the ``lpn-opacity`` tool prints with
``--format json``; ``exit_code`` follows the tool's contract (0 opaque,
1 not opaque, 2 input or assumption error, 3 bound exceeded).
"""

import json
import os

from . import _core
from ._core import ParseError, SemanticError

__all__ = [
    "ParseError",
    "SemanticError",
    "check",
    "export_dot",
    "normalize",
    "oracle",
    "read",
]


def read(path):
    """Returns the text of a net document."""
    with open(os.fspath(path), encoding="utf-8") as f:
        return f.read()


def check(text, property="infinite", k=0, max_states=None, max_token=None):
    """Decides opacity with the two-way observer and returns the report."""
    return json.loads(_core.check(text, property, k, max_states, max_token))


def oracle(text, property="infinite", k=0, depth=None, max_states=None, max_token=None):
    """Bounded definition-level check; "opaque" holds up to report["certified_depth"]."""
    return json.loads(_core.oracle(text, property, k, depth, max_states, max_token))


def export_dot(text, artifact, k=0):
    return _core.export_dot(text, artifact, k)


def normalize(text):
    return _core.normalize(text)
