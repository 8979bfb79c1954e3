# Copyright 2026 The cyclat Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Circular permutations, admitted vectors and affine windows."""

from cyclat._cyclat import (
    Cycle,
    CyclatError,
    Diagram,
    Vector,
    Window,
    build,
    check,
    check_names,
    compare,
    eulerian,
    join,
    meet,
    parse,
    path_conjugator,
)

__all__ = [
    "Cycle",
    "CyclatError",
    "Diagram",
    "Vector",
    "Window",
    "build",
    "check",
    "check_names",
    "compare",
    "eulerian",
    "join",
    "meet",
    "parse",
    "path_conjugator",
]
