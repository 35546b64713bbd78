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
"""Testing the registry of known existence results"""

import pytest
import sys
import numpy.testing as npt
from pentaforge.spectrum import (
    STATUSES,
    LAYERS,
    ExistenceStatus,
    facts,
    catalog_values,
    pent5_no_olp_known,
)
from pentaforge.core import ParameterRangeError


@pytest.mark.parametrize("query, status, layer", [
    ((4, 4), 'nonexistent', 'theory'),
    ((4, 2), 'nonexistent', 'theory'),
    ((4, 5), 'nonexistent', 'theory'),
    ((5, 6), 'nonexistent', 'theory'),
    ((6, 6), 'nonexistent', 'theory'),
    ((3, 3, 1), 'nonexistent', 'theory'),
    ((3, 7, 0), 'nonexistent', 'theory'),
    ((4, 1, 0), 'nonexistent', 'theory'),
    ((4, 1), 'exists_one_olp', 'theory'),
    ((2, 2), 'exists_no_olp', 'theory'),
    ((7, 7), 'exists_no_olp', 'theory'),
    ((2, 3), 'exists', 'theory'),
    ((57, 57), 'open', 'open'),
    ((4, 13), 'exists_no_olp', 'catalog'),
    ((5, 20), 'exists_no_olp', 'catalog'),
    ((3, 39), 'exists_no_olp', 'catalog'),
    ((5, 86), 'exists', 'catalog'),
    ((5, 86, 35), 'exists', 'catalog'),
    ((3, 7), 'exists', 'cited'),
    ((4, 9), 'exists', 'cited'),
    ((5, 235), 'exists_no_olp', 'cited'),
    ((4, 9208, 1), 'exists_one_olp', 'cited'),
    ((5, 86, 0), 'open', 'open'),
    ((4, 8), 'open', 'open'),
    ((4, 308), 'open', 'open'),
    ((4, 308, 0), 'open', 'open'),
    ((4, 9172, 1), 'open', 'open'),
    ((5, 11), 'open', 'open'),
])
def test_facts(query, status, layer) -> None:
    """Test the status and layer of known and open cases"""
    result = facts(*query)
    assert result.status == status
    assert result.layer == layer
    assert result.status in STATUSES
    assert result.layer in LAYERS
    assert result.conditional == (layer == 'cited')


def test_provenance() -> None:
    """Test the provenance text of constructed results"""
    assert 'm = 6' in facts(3, 39).provenance
    assert 'PENT-4-13' in facts(4, 13).provenance
    assert 'Moore' in facts(3, 3, 1).provenance or 'K_' in facts(3, 3, 1).provenance


@pytest.mark.parametrize("query", [(1, 5), (4, 0), (4, 13, -1)])
def test_facts_range(query) -> None:
    """Test rejection of parameters outside the range"""
    with pytest.raises(ParameterRangeError):
        facts(*query)


def test_existence_status() -> None:
    """Test the exists flag and string form of ExistenceStatus"""
    status = ExistenceStatus('exists_no_olp', 'construction', 'catalog')
    assert status.exists
    assert not status.conditional
    assert str(status) == 'exists_no_olp [catalog] construction'
    assert not ExistenceStatus('open', 'not decided', 'open').exists
    assert not facts(4, 4).exists
    assert str(facts(3, 7)).endswith('(conditional)')


def test_catalog_values() -> None:
    """Test the replication numbers of the catalog entries"""
    values = catalog_values(4)
    npt.assert_equal(len(values), 39)
    assert 13 in values
    assert all(r % 4 in (0, 1) for r in values)
    assert catalog_values(5) >= {20}


def test_pent5_no_olp_known() -> None:
    """Test the literature lookup for PENT(5, r) without opposite line pair"""
    assert pent5_no_olp_known(235)
    assert pent5_no_olp_known(880)
    assert pent5_no_olp_known(1101)
    assert not pent5_no_olp_known(11)
    assert not pent5_no_olp_known(86)


if __name__ == '__main__':
    pytest.main(sys.argv)
