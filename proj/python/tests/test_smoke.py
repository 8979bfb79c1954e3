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

import json
import math

import pytest

import cyclat


def test_parse_and_convert():
    c = cyclat.Cycle("(1,4,3,2)")
    assert str(c) == "(1,4,3,2)"
    assert c.rank() == 4
    assert c.letters == [1, 4, 3, 2]
    assert c.to_window().entries == [-2, 1, 4, 7]
    assert c.to_vector().rows() == [[0, 1, 2], [0, 1], [0]]
    assert cyclat.parse("[-2,1,4,7]") == c
    assert cyclat.Cycle("(4,3,2,1)") == c


def test_join_meet():
    x = cyclat.Cycle("(14235)")
    y = cyclat.Cycle("(13425)")
    assert str(cyclat.join(x, y)) == "(1,3,5,4,2)"
    assert str(cyclat.meet(x, y)) == "(1,4,2,5,3)"
    assert cyclat.compare(x, y) == "INCOMPARABLE"


def test_build():
    d = cyclat.build(5)
    assert len(d) == math.factorial(4)
    exported = json.loads(d.to_json())
    assert len(exported["nodes"]) == 24
    assert d.to_dot().count("->") == len(d.edges())


def test_check():
    report = cyclat.check("eulerian", 5)
    assert report["pass"] is True
    assert "eulerian" in cyclat.check_names()


def test_errors():
    with pytest.raises(cyclat.CyclatError):
        cyclat.Cycle("(1,1,2)")
    with pytest.raises(ValueError):
        cyclat.check("frobnicate", 4)
