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
"""Testing the recursive construction planners and the table replay"""

import pytest
import sys
import numpy.testing as npt
from pentaforge.spectrum import (
    JolpPlan,
    jolp_t_values,
    plan_jolp,
    m40_construction,
    m10_construction,
    td_construction_conditions,
    plan_construction53,
    replay_tables,
    M40_PUBLISHED,
    M10_PUBLISHED,
)
from pentaforge.core import ParameterRangeError


def _accept(s) -> bool:
    return True


def test_jolp_t_values() -> None:
    """Test the t with 12t + 1 coprime to 44"""
    values = jolp_t_values(0, 20)
    assert 10 not in values
    npt.assert_equal(len(values), 19)
    assert jolp_t_values(26, 3) == [3]


def test_plan_jolp() -> None:
    """Test the smallest plans found with the registry"""
    plan = plan_jolp(0, 13)
    assert (plan.t, plan.a, plan.s) == (1, 13, 189)
    assert plan.gdd_type == '44^13'
    npt.assert_equal(plan.r(2), 88 + 189)
    plan = plan_jolp(1, 0)
    assert (plan.t, plan.a, plan.s) == (1, 1156, 15048)
    npt.assert_equal(plan.s % 44, 0)


def test_plan_jolp_oracle() -> None:
    """Test plans with a custom oracle and bounds"""
    plan = plan_jolp(0, 13, oracle=lambda a, olps: True)
    assert plan == JolpPlan(0, 13, 1, 13, 189)
    assert str(plan) == 'j=0 residue=13: t=1 a=13 s=189 type 44^13'
    assert plan_jolp(0, 13, oracle=lambda a, olps: False) is None


@pytest.mark.parametrize("j, residue", [(-1, 0), (0, 2), (0, 44)])
def test_plan_jolp_range(j, residue) -> None:
    """Test rejection of invalid j and residues"""
    with pytest.raises(ParameterRangeError):
        plan_jolp(j, residue)


def test_m_constructions() -> None:
    """Test the PENT(5) constructions with M40 and M10 sets"""
    assert 880 in m40_construction(20)
    for r0, values in M40_PUBLISHED.items():
        assert set(values) <= set(m40_construction(r0, oracle=_accept))
    for r0, values in M10_PUBLISHED.items():
        assert set(values) <= set(m10_construction(r0, oracle=_accept))
    with pytest.raises(ParameterRangeError):
        m10_construction(107)


def test_td_construction_conditions() -> None:
    """Test the conditions of the TD-patched 5-GDD construction"""
    assert td_construction_conditions(2, 40, 43) == []
    assert td_construction_conditions(2, 41, 43) != []
    assert 'q is a prime power' in td_construction_conditions(2, 40, 44)


def test_plan_construction53() -> None:
    """Test the PENT(5) values planned with the default oracle"""
    assert plan_construction53(2, 40, 43, 20) == [880, 1066]
    assert plan_construction53(90, 6, 7, 156) == [1101]
    with pytest.raises(ParameterRangeError):
        plan_construction53(2, 40, 43, r0=21)
    with pytest.raises(ParameterRangeError):
        plan_construction53(2, 41, 43)


def test_plan_construction53_keywords() -> None:
    """Test the planner with r0 and existence_oracle given by name"""
    values = plan_construction53(2, 40, 43, r0=20, existence_oracle=lambda s: s == 20)
    assert values == [880]
    assert plan_construction53(2, 40, 43, r0=20, existence_oracle=lambda s: False) == []
    accepted = plan_construction53(g=2, u=40, q=43, existence_oracle=lambda s: True)
    assert {880, 1066} <= set(accepted)
    npt.assert_equal(min(accepted), 880)


def test_replay_tables() -> None:
    """Test that every table row replays"""
    frame = replay_tables()
    npt.assert_equal(len(frame), 186)
    assert list(frame.columns) == ['table', 'row', 'passed', 'detail']
    assert frame['passed'].all()
    counts = frame['table'].value_counts()
    npt.assert_equal(counts['td-construction'], 44)
    npt.assert_equal(counts['no-olp-weak'], 22)
    npt.assert_equal(counts['m40'], 4)


if __name__ == '__main__':
    pytest.main(sys.argv)
