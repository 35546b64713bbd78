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
"""Testing the parameter arithmetic of pentagonal geometries"""

import pytest
import sys
import numpy.testing as npt
from pentaforge.core import (
    pent_params,
    point_count,
    is_admissible,
    theorem22_params,
    AdmissibilityError,
    ParamError,
    ParameterRangeError,
)


@pytest.mark.parametrize("k, r, v, b", [
    (2, 2, 5, 5),
    (3, 3, 10, 10),
    (3, 7, 18, 42),
    (4, 13, 44, 143),
    (5, 86, 350, 6020),
])
def test_pent_params(k, r, v, b) -> None:
    """Test point and line counts"""
    if (v * r) % k:
        with pytest.raises(AdmissibilityError):
            pent_params(k, r)
        return
    params = pent_params(k, r)
    npt.assert_equal(params.v, v)
    npt.assert_equal(params.b, b)
    npt.assert_equal(point_count(k, r), v)
    assert str(params) == 'PENT({},{}) v={} b={}'.format(k, r, v, b)


@pytest.mark.parametrize("k", [3, 4, 5, 6, 7])
def test_admissibility_matches_line_count(k) -> None:
    """Test that r(r-1) = 0 mod k exactly when v*r/k is an integer"""
    for r in range(1, 200):
        admissible = is_admissible(k, r)
        assert admissible == ((point_count(k, r) * r) % k == 0)
        if admissible:
            pent_params(k, r)
        else:
            with pytest.raises(AdmissibilityError):
                pent_params(k, r)


def test_admissible_residues() -> None:
    """Test the residue classes of admissible r"""
    assert [r for r in range(12) if is_admissible(3, r)] == [0, 1, 3, 4, 6, 7, 9, 10]
    assert [r for r in range(12) if is_admissible(4, r)] == [0, 1, 4, 5, 8, 9]
    assert [r for r in range(12) if is_admissible(5, r)] == [0, 1, 5, 6, 10, 11]


@pytest.mark.parametrize("k, r", [(1, 3), (0, 3), (3, 0), (4, -1)])
def test_parameter_range(k, r) -> None:
    """Test rejection of k < 2 and r < 1"""
    with pytest.raises(ParameterRangeError):
        pent_params(k, r)


def test_parameter_types() -> None:
    """Test rejection of non-integer parameters"""
    with pytest.raises(TypeError):
        pent_params(4.0, 13)
    with pytest.raises(TypeError):
        pent_params(4, '13')


@pytest.mark.parametrize("n, r_total, k, r", [
    (5, 10, 4, 10 + 4 * 5 // 3),
    (7, 0, 4, 10),
    (121, 121 * 13, 4, 121 * 13 + 200),
    (41, 20 * 3 + 23, 3, 20 * 3 + 23 + 80),
    (3, 0, 3, 4),
])
def test_theorem22_params(n, r_total, k, r) -> None:
    """Test the replication number of an overlay"""
    if ((n - 1) * (k + 1)) % (k - 1):
        with pytest.raises(ParamError):
            theorem22_params(n, r_total, k)
        return
    npt.assert_equal(theorem22_params(n, r_total, k), r)


if __name__ == '__main__':
    pytest.main(sys.argv)
