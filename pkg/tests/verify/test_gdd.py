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
"""Testing the verification of group divisible designs"""

import pytest
import sys
import numpy.testing as npt
from typing import Any
from hqsbase.qonfig import Qonfig
from pentaforge.core import (
    Design,
    Gdd,
    ParamError,
    PartitionError,
)
from pentaforge.verify import (
    verify_gdd,
    verify_resolution,
    verify_rgdd,
    GddReport,
)

TD_BLOCKS = [[0, 2, 4], [0, 3, 5], [1, 2, 5], [1, 3, 4]]
TD_GROUPS = [[0, 1], [2, 3], [4, 5]]


def _resolvable() -> Gdd:
    return Gdd(4, [[0, 2], [1, 3], [0, 3], [1, 2]], [[0, 1], [2, 3]], 2,
               resolution=[[0, 1], [2, 3]])


def _serialisation_convertion(to_conv: Qonfig[Any]) -> Any:
    config = to_conv.to_qonfig()
    json = config.to_json()
    config2 = Qonfig.from_json(json)
    return config2.to_instance()


def test_transversal_design() -> None:
    """Test a TD(3, 2) given with and without explicit groups"""
    report = verify_gdd(Design(6, TD_BLOCKS), 3, TD_GROUPS)
    assert report.valid
    assert report.gdd_type == '2^3'
    assert report.to_dict()['kind'] == 'GDD'
    assert verify_gdd(Gdd(6, TD_BLOCKS, TD_GROUPS, 3), 3).valid
    assert str(report) == '3-GDD of type 2^3 v=6 b=4: valid'


def test_violations() -> None:
    """Test that every kind of defect is reported"""
    report = verify_gdd(Design(6, TD_BLOCKS[1:] + [[0, 1, 4]]), 3, TD_GROUPS)
    assert not report.valid
    text = ' '.join(report.violations)
    assert 'inside a group' in text
    assert 'uncovered' in text
    report = verify_gdd(Design(6, TD_BLOCKS + [[0, 2]]), 3, TD_GROUPS)
    text = ' '.join(report.violations)
    assert 'size other than 3' in text
    assert 'more than once' in text


def test_missing_groups() -> None:
    """Test that a plain design needs groups"""
    with pytest.raises(ParamError):
        verify_gdd(Design(6, TD_BLOCKS), 3)
    with pytest.raises(PartitionError):
        verify_gdd(Design(6, TD_BLOCKS), 3, [[0, 1], [2, 3]])


def test_resolution() -> None:
    """Test parallel classes"""
    gdd = _resolvable()
    assert verify_resolution(gdd, [[0, 1], [2, 3]])
    assert not verify_resolution(gdd, [[0, 2], [1, 3]])
    assert not verify_resolution(gdd, [[0, 1], [2]])
    report = verify_rgdd(gdd, 2)
    assert report.valid
    assert report.resolution_valid
    assert report.to_dict()['kind'] == 'RGDD'
    report = verify_rgdd(gdd, 2, classes=[[0, 2], [1, 3]])
    assert not report.valid
    assert 'resolution: INVALID' in str(report)
    with pytest.raises(ParamError):
        verify_rgdd(Gdd(6, TD_BLOCKS, TD_GROUPS, 3), 3)
    with pytest.raises(ParamError):
        verify_rgdd(Design(4, gdd.blocks), 2, classes=[[0, 1], [2, 3]])


def test_report_output() -> None:
    """Test the pandas summary and the Qonfig round trip"""
    report = verify_rgdd(_resolvable(), 2)
    series = report.to_pd_series()
    assert series['type'] == '2^2'
    npt.assert_equal(series['b'], 4)
    converted = _serialisation_convertion(report)
    assert isinstance(converted, GddReport)
    assert converted.to_dict() == report.to_dict()


if __name__ == '__main__':
    pytest.main(sys.argv)
