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
"""Testing the verification of pentagonal geometries"""

import pytest
import sys
import math
import numpy.testing as npt
import networkx as nx
from itertools import combinations
from typing import Any
from hqsbase.qonfig import Qonfig
from pentaforge.core import (
    Design,
    ParamError,
)
from pentaforge.verify import (
    verify_pent,
    verify_pls,
    deficiency_graph,
    girth,
    classify_components,
    opposite_line_map,
    opposite_line_pairs,
    compare_claims,
    PentReport,
    DeficiencyReport,
)


def desargues() -> Design:
    """Return the Desargues configuration, a PENT(3, 3) with Petersen deficiency graph"""
    points = list(combinations(range(5), 2))
    label = {point: number for number, point in enumerate(points)}
    lines = [[label[pair] for pair in combinations(triple, 2)]
             for triple in combinations(range(5), 3)]
    return Design(10, lines)


def pentagon() -> Design:
    return Design(5, [[0, 1], [1, 2], [2, 3], [3, 4], [4, 0]])


def _serialisation_convertion(to_conv: Qonfig[Any]) -> Any:
    config = to_conv.to_qonfig()
    json = config.to_json()
    config2 = Qonfig.from_json(json)
    return config2.to_instance()


def test_desargues() -> None:
    """Test the Desargues configuration"""
    report = verify_pent(desargues(), 3, 3)
    assert report.valid
    assert report.violations == []
    npt.assert_equal(report.deficiency.degree, 3)
    npt.assert_equal(report.deficiency.girth, 5)
    assert report.deficiency.connected
    npt.assert_equal(report.olp_count, 0)
    assert all(index >= 0 for index in report.opp_map)
    assert nx.is_isomorphic(deficiency_graph(desargues()), nx.petersen_graph())
    assert str(report).splitlines()[0] == 'PENT(3,3) v=10 b=10: valid'


def test_pentagon() -> None:
    """Test the pentagon, a PENT(2, 2) whose deficiency graph is a pentagram"""
    report = verify_pent(pentagon(), 2, 2)
    assert report.valid
    npt.assert_equal(report.deficiency.girth, 5)
    npt.assert_equal(report.deficiency.degree, 2)
    assert report.opp_map == [2, 3, 4, 0, 1]


def test_opposite_line_pair() -> None:
    """Test PENT(2, 1), two disjoint lines opposite to each other"""
    design = Design(4, [[0, 1], [2, 3]])
    report = verify_pent(design, 2, 1)
    assert report.valid
    assert report.olp_pairs == [(0, 1)]
    npt.assert_equal(report.olp_count, 1)
    assert report.deficiency.girth == 4
    assert report.deficiency.components[0].is_kkk
    assert opposite_line_pairs(design) == [(0, 1)]


def test_missing_block() -> None:
    """Test that removing a line breaks regularity and the opposite line axiom"""
    design = Design(10, desargues().blocks[1:])
    report = verify_pent(design, 3, 3)
    assert not report.valid
    assert not report.is_regular_r
    assert not report.opposite_axiom_holds
    assert report.is_pls
    assert any('expected 10 blocks' in violation for violation in report.violations)


def test_repeated_and_wrong_size_blocks() -> None:
    """Test that repeated and wrongly sized blocks are all reported"""
    blocks = desargues().blocks
    report = verify_pent(Design(10, blocks + [blocks[0]]), 3, 3)
    assert not report.is_pls
    assert any('repeated blocks' in violation for violation in report.violations)
    report = verify_pent(Design(10, blocks[:-1] + [blocks[-1][:2]]), 3, 3)
    assert not report.is_uniform_k
    assert not report.valid


def test_point_count_mismatch() -> None:
    """Test rejection of a design on the wrong number of points"""
    with pytest.raises(ParamError):
        verify_pent(pentagon(), 3, 3)


def test_verify_pls() -> None:
    """Test detection of pairs on two blocks"""
    design = Design(4, [[0, 1, 2], [0, 1, 3]])
    assert verify_pls(design) == [(0, 1, 2)]
    assert verify_pls(desargues()) == []


def test_girth() -> None:
    """Test shortest cycles of standard graphs"""
    assert girth(nx.petersen_graph()) == 5
    assert girth(nx.cycle_graph(7)) == 7
    assert girth(nx.complete_graph(4)) == 3
    assert girth(nx.complete_bipartite_graph(3, 3)) == 4
    assert girth(nx.path_graph(5)) == math.inf
    assert girth(nx.heawood_graph()) == 6
    assert girth(nx.tutte_graph()) == 4


@pytest.mark.parametrize("seed", range(10))
def test_girth_random_cubic(seed) -> None:
    """Test girth against networkx on random cubic graphs"""
    graph = nx.random_regular_graph(3, 20, seed=seed)
    assert girth(graph) == nx.girth(graph)


def test_deficiency_report_forest() -> None:
    """Test that an acyclic deficiency graph has no girth"""
    report = DeficiencyReport.from_graph(nx.path_graph(4), 2)
    assert report.girth is None
    assert DeficiencyReport.from_graph(nx.cycle_graph(5), 2).girth == 5


def test_classify_components() -> None:
    """Test the K_{k,k} flags of components"""
    graph = nx.disjoint_union(nx.complete_bipartite_graph(3, 3), nx.cycle_graph(5))
    components = classify_components(graph, 3)
    npt.assert_equal(len(components), 2)
    assert components[0].vertices == (0, 1, 2, 3, 4, 5)
    assert components[0].is_kkk
    assert not components[1].is_kkk
    report = DeficiencyReport.from_graph(graph, 3)
    assert report.degree is None
    npt.assert_equal(report.olp_count, 1)
    assert not report.connected
    assert report.to_dict()['component_count'] == 2


def test_opposite_line_map() -> None:
    """Test that missing opposite lines are marked -1"""
    design = Design(5, [[0, 1], [1, 2], [2, 3], [3, 4]])
    opp = opposite_line_map(design)
    npt.assert_equal(opp[0], -1)
    npt.assert_equal(opp[2], -1)


def test_compare_claims() -> None:
    """Test comparison with claimed statistics"""
    report = verify_pent(desargues(), 3, 3)
    assert compare_claims(report, {'girth': 5, 'connected': 1, 'olp': 0, 'blocks': 10}) == []
    assert compare_claims(report, {'girth': 6, 'note': 'ignored'}) == ['claimed girth=6, found 5']


def test_report_output() -> None:
    """Test the machine readable summaries"""
    report = verify_pent(desargues(), 3, 3)
    summary = report.to_dict()
    assert summary['valid'] is True
    assert summary['kind'] == 'PENT'
    assert summary['girth'] == 5
    series = report.to_pd_series()
    assert series['violations'] == ''
    npt.assert_equal(series['v'], 10)


def test_serialisation() -> None:
    """Test Qonfig round trip of a verification report"""
    report = verify_pent(desargues(), 3, 3)
    converted = _serialisation_convertion(report)
    assert isinstance(converted, PentReport)
    assert converted.valid
    assert converted.to_dict() == report.to_dict()
    assert converted.opp_map == report.opp_map


if __name__ == '__main__':
    pytest.main(sys.argv)
