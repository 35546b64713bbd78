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
"""Testing differences in Z_q x Z_2 and the difference census"""

import pytest
import sys
import numpy.testing as npt
from pentaforge.core import (
    CensusError,
    DegenerateError,
    ParamError,
)
from pentaforge.verify import (
    Difference,
    pair_difference,
    difference_census,
)
from pentaforge.verify.differences import expected_differences
from pentaforge.construct import (
    pent3_base_blocks,
    pent3_deficiency_edges,
)


@pytest.mark.parametrize("x, y, q, difference", [
    ((0, 0), (2, 1), 7, Difference(2, (1, 0))),
    ((2, 1), (0, 0), 7, Difference(2, (1, 0))),
    ((0, 0), (6, 1), 7, Difference(1, (0, 1))),
    ((3, 0), (3, 1), 7, Difference(0, (0, 1))),
    ((3, 1), (10, 0), 7, Difference(0, (0, 1))),
    ((1, 1), (4, 1), 7, Difference(3, (1, 1))),
    ((0, 0), (-1, 0), 35, Difference(1, (0, 0))),
])
def test_pair_difference(x, y, q, difference) -> None:
    """Test differences of single pairs"""
    assert pair_difference(x, y, q) == difference


def test_pair_difference_errors() -> None:
    """Test rejection of a point paired with itself and of even moduli"""
    with pytest.raises(DegenerateError):
        pair_difference((3, 0), (10, 0), 7)
    with pytest.raises(ParamError):
        pair_difference((0, 0), (1, 0), 8)


def test_difference_format() -> None:
    """Test the d_{i,j} notation"""
    assert str(Difference(4, (1, 0))) == '4_{1,0}'


@pytest.mark.parametrize("m", [5, 6, 7, 8, 9, 12, 21, 50])
def test_census(m) -> None:
    """Test that every difference is generated exactly once"""
    q = 6 * m + 5
    census = difference_census(pent3_base_blocks(m), pent3_deficiency_edges(m), q)
    npt.assert_equal(len(census), 12 * m + 9)
    npt.assert_equal(len(expected_differences(q)), 12 * m + 9)
    assert set(census.values()) == {1}


def test_census_failure() -> None:
    """Test that a dropped base block is reported as uncovered differences"""
    m = 5
    blocks = pent3_base_blocks(m)
    with pytest.raises(CensusError) as error:
        difference_census(blocks[1:], pent3_deficiency_edges(m), 6 * m + 5)
    npt.assert_equal(len(error.value.uncovered), 3)
    assert error.value.duplicated == []
    with pytest.raises(CensusError) as error:
        difference_census(blocks + blocks[:1], pent3_deficiency_edges(m), 6 * m + 5)
    npt.assert_equal(len(error.value.duplicated), 3)


def test_census_modulus() -> None:
    """Test rejection of moduli other than 6m + 5"""
    with pytest.raises(ParamError):
        difference_census([], [], 33)


if __name__ == '__main__':
    pytest.main(sys.argv)
