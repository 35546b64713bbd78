# Copyright © 2019-2021 HQS Quantum Simulations GmbH. All Rights Reserved.
#
# Licensed under the Apache License, Version 2.0 (the "License"); you may not use this file except
# in compliance with the License. You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software distributed under the License
# is distributed on an "AS IS" BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express
# or implied. See the License for the specific language governing permissions and limitations under
# the License.
"""Testing group types in exponent notation"""

import pytest
import sys
import numpy.testing as npt
from pentaforge.core import (
    GddType,
    parse_gdd_type,
    format_gdd_type,
    type_of_groups,
    ParseError,
    PartitionError,
)


@pytest.mark.parametrize("text, parts, points, groups", [
    ('2^40 6^1', ((2, 40), (6, 1)), 86, 41),
    ('6 2^40', ((2, 40), (6, 1)), 86, 41),
    ('44^3 401^1', ((44, 3), (401, 1)), 533, 4),
    ('5^5', ((5, 5),), 25, 5),
    ('7', ((7, 1),), 7, 1),
    ('3^2 3^4', ((3, 6),), 18, 6),
])
def test_parse(text, parts, points, groups) -> None:
    """Test parsing and normalization"""
    gdd_type = parse_gdd_type(text)
    assert gdd_type.parts == parts
    npt.assert_equal(gdd_type.points, points)
    npt.assert_equal(gdd_type.group_count, groups)
    assert parse_gdd_type(format_gdd_type(gdd_type)) == gdd_type


@pytest.mark.parametrize("text", ['', '2^', '^3', '2^x', '2^0', '0^3', '2**3', '-2^3'])
def test_parse_errors(text) -> None:
    """Test rejection of malformed tokens"""
    with pytest.raises(ParseError):
        parse_gdd_type(text)


def test_equality_and_hash() -> None:
    """Test construction from mappings, pairs and strings"""
    first = GddType({2: 40, 6: 1})
    second = GddType([(6, 1), (2, 20), (2, 20)])
    assert first == second
    assert first == '2^40 6^1'
    assert hash(first) == hash(second)
    assert len({first, second}) == 1
    assert first != GddType({2: 40})
    assert first != 86
    assert str(first) == '2^40 6^1'
    assert repr(first) == "GddType('2^40 6^1')"


def test_sizes_and_scaling() -> None:
    """Test expansion into sizes and inflation of the sizes"""
    gdd_type = GddType({1: 3, 4: 2})
    assert list(gdd_type.sizes()) == [1, 1, 1, 4, 4]
    assert gdd_type.scaled(5) == GddType({5: 3, 20: 2})
    npt.assert_equal(gdd_type.scaled(5).points, 5 * gdd_type.points)


def test_type_of_groups() -> None:
    """Test the type of a partition"""
    groups = [[0, 1], [2, 3], [4, 5, 6, 7, 8, 9]]
    assert type_of_groups(groups) == GddType({2: 2, 6: 1})
    assert type_of_groups(groups, 10) == '2^2 6^1'


@pytest.mark.parametrize("groups, v", [
    ([[0, 1], [1, 2]], 3),
    ([[0, 1], [3]], 4),
    ([[0, 1], []], 2),
    ([[0, 5]], 2),
])
def test_type_of_groups_errors(groups, v) -> None:
    """Test rejection of overlapping, incomplete and out of range groups"""
    with pytest.raises(PartitionError):
        type_of_groups(groups, v)


if __name__ == '__main__':
    pytest.main(sys.argv)
