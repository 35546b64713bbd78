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
"""Testing the Design and Gdd classes"""

import pytest
import sys
import numpy as np
import numpy.testing as npt
from typing import Any
from hqsbase.qonfig import Qonfig
from pentaforge.core import (
    Design,
    Gdd,
    GddType,
    normalize_block,
    ParamError,
    PartitionError,
)

PENTAGON = [[0, 1], [1, 2], [2, 3], [3, 4], [4, 0]]


def _serialisation_convertion(to_conv: Qonfig[Any]) -> Any:
    config = to_conv.to_qonfig()
    json = config.to_json()
    config2 = Qonfig.from_json(json)
    return config2.to_instance()


def test_blocks_are_normalized() -> None:
    """Test that blocks are stored as sorted tuples in the given order"""
    design = Design(5, PENTAGON)
    assert design.blocks == [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]
    npt.assert_equal(design.b, 5)
    npt.assert_equal(len(design), 5)
    assert design[4] == (0, 4)
    assert list(design) == design.blocks
    assert design.block_sizes() == [2]
    npt.assert_array_equal(design.point_degrees(), [2, 2, 2, 2, 2])
    assert str(design) == 'Design(v=5, b=5)'
    assert repr(design) == 'Design(v=5, b=5)'


def test_empty_design() -> None:
    """Test a design without blocks"""
    design = Design(4)
    npt.assert_equal(design.b, 0)
    assert design.block_sizes() == []
    npt.assert_array_equal(design.point_degrees(), np.zeros(4))


@pytest.mark.parametrize("block, v", [
    ([0], 5),
    ([0, 5], 5),
    ([-1, 2], 5),
    ([1, 1, 2], 5),
])
def test_malformed_blocks(block, v) -> None:
    """Test rejection of short blocks, repeated points and labels outside [0, v)"""
    with pytest.raises(ParamError):
        normalize_block(block, v)
    with pytest.raises(ParamError):
        Design(v, [block])


def test_point_count_checks() -> None:
    """Test rejection of invalid point counts"""
    with pytest.raises(TypeError):
        Design(5.0, PENTAGON)
    with pytest.raises(ParamError):
        Design(-1)
    assert Design(np.int64(5), PENTAGON).v == 5


def test_equality() -> None:
    """Test comparison as sorted multisets of blocks"""
    design = Design(5, PENTAGON)
    assert design == Design(5, list(reversed(PENTAGON)))
    assert design == Design(5, [[b, a] for a, b in PENTAGON])
    assert design != Design(6, PENTAGON)
    assert design != Design(5, PENTAGON[:4])
    assert design != Design(5, PENTAGON + [PENTAGON[0]])
    assert design != PENTAGON


def test_relabel() -> None:
    """Test permutations and embeddings of the point set"""
    design = Design(5, PENTAGON)
    rotated = design.relabel([1, 2, 3, 4, 0])
    assert rotated == design
    embedded = design.relabel({0: 10, 1: 11, 2: 12, 3: 13, 4: 14}, v=15)
    npt.assert_equal(embedded.v, 15)
    assert (10, 14) in embedded.blocks
    with pytest.raises(ParamError):
        design.relabel([0, 0, 1, 2, 3])


def test_design_serialisation() -> None:
    """Test Qonfig round trip of a design"""
    design = Design(5, PENTAGON)
    converted = _serialisation_convertion(design)
    assert isinstance(converted, Design)
    assert converted == design


def _transversal() -> Gdd:
    # TD(3,2) on groups {0,1}, {2,3}, {4,5}
    blocks = [[0, 2, 4], [0, 3, 5], [1, 2, 5], [1, 3, 4]]
    return Gdd(6, blocks, [[0, 1], [2, 3], [4, 5]], 3)


def _resolvable() -> Gdd:
    return Gdd(4, [[0, 2], [1, 3], [0, 3], [1, 2]], [[0, 1], [2, 3]], 2,
               resolution=[[0, 1], [2, 3]])


def test_gdd() -> None:
    """Test groups, type and resolution of a group divisible design"""
    gdd = _transversal()
    npt.assert_equal(gdd.k, 3)
    assert gdd.gdd_type == GddType({2: 3})
    assert gdd.groups == [(0, 1), (2, 3), (4, 5)]
    assert gdd.resolution is None
    assert _resolvable().resolution == [(0, 1), (2, 3)]
    npt.assert_array_equal(gdd.group_of_points(), [0, 0, 1, 1, 2, 2])
    assert gdd.as_design() == Design(6, gdd.blocks)
    assert not isinstance(gdd.as_design(), Gdd)
    assert str(gdd) == 'Gdd(k=3, type=2^3, b=4)'


def test_gdd_equality() -> None:
    """Test that groups and block size take part in the comparison"""
    gdd = _transversal()
    assert gdd == _transversal()
    other_groups = Gdd(6, gdd.blocks, [[0, 2], [1, 3], [4, 5]], 3)
    assert gdd != other_groups
    assert gdd != gdd.as_design()


def test_gdd_errors() -> None:
    """Test rejection of bad partitions and resolutions"""
    with pytest.raises(PartitionError):
        Gdd(6, [], [[0, 1], [1, 2, 3, 4, 5]], 3)
    with pytest.raises(PartitionError):
        Gdd(6, [[0, 2, 4]], [[0, 1], [2, 3], [4, 5]], 3, resolution=[[0, 1]])


def test_gdd_serialisation() -> None:
    """Test Qonfig round trip of a resolvable group divisible design"""
    for gdd in (_transversal(), _resolvable()):
        converted = _serialisation_convertion(gdd)
        assert isinstance(converted, Gdd)
        assert converted == gdd
        assert converted.resolution == gdd.resolution


if __name__ == '__main__':
    pytest.main(sys.argv)
