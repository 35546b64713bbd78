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
"""Testing inflation, augmentation, TD patching and overlays"""

import pytest
import sys
import numpy.testing as npt
from pentaforge.catalog import instantiate
from pentaforge.construct import (
    degenerate_pent,
    filler_replication,
    wfc_overlay,
    inflate,
    rgdd_to_gdd,
    td_patch_gdd,
    td,
    rgdd_from_mols,
    transversal_design,
)
from pentaforge.core import (
    GddType,
    IngredientError,
    ParamError,
    ParameterRangeError,
    ResolutionError,
)
from pentaforge.verify import (
    verify_gdd,
    verify_pent,
)


def test_inflate() -> None:
    """Test inflation of a TD(3, 3) by 2"""
    design = inflate(td(3, 3), 2)
    assert design.gdd_type == '6^3'
    npt.assert_equal(design.b, 9 * 4)
    assert design.groups[0] == tuple(range(6))
    assert verify_gdd(design, 3).valid


def test_inflate_errors() -> None:
    """Test missing and mismatched cell fillers"""
    with pytest.raises(ParamError):
        inflate(td(5, 5), 2, cell_filler=td(5, 4))
    with pytest.raises(IngredientError):
        inflate(td(5, 5), 6)


def test_rgdd_to_gdd() -> None:
    """Test that a resolvable 4-GDD of type 5^4 becomes a 5-GDD of type 5^5"""
    design = rgdd_to_gdd(rgdd_from_mols(4, 5))
    assert design.gdd_type == '5^5'
    npt.assert_equal(design.k, 5)
    npt.assert_equal(design.b, 25)
    assert design.groups[-1] == tuple(range(20, 25))
    assert verify_gdd(design, 5).valid
    with pytest.raises(ResolutionError):
        rgdd_to_gdd(td(4, 5))


def test_td_patch() -> None:
    """Test weighting every point of a TD(5, 5) by 4"""
    design = td_patch_gdd(td(5, 5), 4, [4] * 5, {4: transversal_design(5, 4)},
                          weight_set=[4])
    assert design.gdd_type == GddType({20: 5})
    npt.assert_equal(design.b, 25 * 16)
    assert verify_gdd(design, 5).valid


def test_td_patch_errors() -> None:
    """Test wrong weight counts, weights outside D and missing fillers"""
    fillers = {4: transversal_design(5, 4)}
    with pytest.raises(ParamError):
        td_patch_gdd(td(5, 5), 4, [4] * 4, fillers)
    with pytest.raises(ParamError):
        td_patch_gdd(td(5, 5), 4, [4, 4, 4, 4, 8], fillers, weight_set=[4])
    with pytest.raises(IngredientError) as error:
        td_patch_gdd(td(5, 5), 4, [4, 4, 4, 4, 8], fillers)
    assert error.value.missing == 'GDD of type 4^4 8^1'
    with pytest.raises(ParamError):
        td_patch_gdd(td(5, 5), 4, [4] * 5, {4: td(5, 5)})


def test_degenerate_pent() -> None:
    """Test the PENT(k, 1) made of one opposite line pair"""
    design = degenerate_pent(5)
    npt.assert_equal(design.v, 10)
    npt.assert_equal(filler_replication(design, 5), 1)
    report = verify_pent(design, 5, 1)
    assert report.valid
    npt.assert_equal(report.olp_count, 1)
    with pytest.raises(ParameterRangeError):
        degenerate_pent(1)
    with pytest.raises(ParamError):
        filler_replication(design, 4)


def test_overlay_pent3() -> None:
    """Test a PENT(3, 7) with three opposite line pairs from a TD(3, 6)"""
    design = wfc_overlay(transversal_design(3, 6), {6: degenerate_pent(3)})
    report = verify_pent(design, 3, 7)
    assert report.valid
    npt.assert_equal(report.olp_count, 3)
    npt.assert_equal(design.b, 42)


def test_overlay_errors() -> None:
    """Test missing and mismatched fillers"""
    with pytest.raises(IngredientError):
        wfc_overlay(transversal_design(3, 6), {})
    with pytest.raises(ParamError):
        wfc_overlay(transversal_design(3, 6), {6: degenerate_pent(2)})


def test_pent5_86() -> None:
    """Test PENT(5, 86) from the 5-GDD of type 2^35 inflated by 5 and filled with PENT(5, 1)"""
    gdd = inflate(instantiate('GDD5-2^35'), 5)
    assert gdd.gdd_type == '10^35'
    design = wfc_overlay(gdd, {10: degenerate_pent(5)})
    npt.assert_equal(design.v, 350)
    npt.assert_equal(design.b, 6020)
    report = verify_pent(design, 5, 86)
    assert report.valid
    npt.assert_equal(report.olp_count, 35)


if __name__ == '__main__':
    pytest.main(sys.argv)
