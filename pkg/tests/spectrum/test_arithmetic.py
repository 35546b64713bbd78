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
"""Testing admissibility and the recursive PENT(5) families"""

import pytest
import sys
import numpy.testing as npt
from pentaforge.spectrum import (
    admissible,
    admissible_residues,
    theorem22_params,
    Pent5Family,
    pent5_families,
)
from pentaforge.core import (
    ParamError,
    ParameterRangeError,
)


def test_admissible() -> None:
    """Test admissible residues for small block sizes"""
    assert admissible_residues(3) == [0, 1]
    assert admissible_residues(4) == [0, 1]
    assert admissible_residues(6) == [0, 1, 3, 4]
    assert admissible(5, 86)
    assert not admissible(4, 6)
    with pytest.raises(ParameterRangeError):
        admissible(1, 3)


def test_theorem22_params() -> None:
    """Test the replication number of an overlay"""
    npt.assert_equal(theorem22_params(35, 35, 5), 86)
    npt.assert_equal(theorem22_params(4, 39 + 13, 4), 57)
    with pytest.raises(ParamError):
        theorem22_params(5, 10, 4)
    for s in (13, 45, 132):
        for w in range(1, 6):
            npt.assert_equal(theorem22_params(3 * w + 1, 39 * w + s, 4), 44 * w + s)


def test_families_zero_mod_five() -> None:
    """Test the two families of a PENT(5, r) with r = 0 mod 5"""
    first, second = pent5_families(20)
    assert first == Pent5Family('i', 20, 215, 20)
    assert second == Pent5Family('ii', 20, 215, 106, excluded_t=(1,))
    assert str(second) == '215t + 106, t >= 0, t not in {1}'
    assert first.values(700) == [20, 235, 450, 665]
    assert second.values(700) == [106, 536]
    assert second.contains(536)
    assert not second.contains(321)
    assert not second.contains(107)
    assert not second.contains(5)


def test_families_guard() -> None:
    """Test that t = 1 is only excluded for small r not divisible by 3"""
    assert pent5_families(30)[1].excluded_t == ()
    assert pent5_families(25)[1].excluded_t == (1,)
    assert pent5_families(1225)[1].excluded_t == ()


def test_families_one_mod_five() -> None:
    """Test the family of a PENT(5, r) with r = 1 mod 5"""
    family, = pent5_families(21)
    assert family == Pent5Family('iii', 21, 45, 21, t_min=2)
    assert family.values(200) == [111, 156]
    assert not family.contains(66)
    assert str(family) == '45t + 21, t >= 2'


def test_families_errors() -> None:
    """Test rejection of small or inadmissible r"""
    with pytest.raises(ParameterRangeError):
        pent5_families(15)
    with pytest.raises(ParamError):
        pent5_families(22)


if __name__ == '__main__':
    pytest.main(sys.argv)
