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
"""Testing the pentaforge command line"""

import json
import pytest
import sys
import numpy.testing as npt
from pentaforge.cli import (
    EXIT_OK,
    EXIT_USAGE,
    EXIT_INVALID,
    main,
)
from pentaforge.core import load_design
from pentaforge.verify import verify_pent

BROKEN_PENTAGON = """DESIGN v=5 kind=PENT
K=2 R=2
BLOCKS
0 1
1 2
2 3
3 4
0 3
"""


def test_usage_errors(capsys) -> None:
    """Test the exit code of malformed command lines"""
    assert main([]) == EXIT_USAGE
    assert main(['construct']) == EXIT_USAGE
    assert main(['spectrum', 'status', '--k', '4']) == EXIT_USAGE
    assert main(['spectrum', 'status', '--k', '4', '--r', '13', '--olps', '-1']) == EXIT_USAGE
    assert main(['verify']) == EXIT_USAGE
    assert main(['catalog', 'show', 'PENT-4-14']) == EXIT_USAGE


def test_status(capsys) -> None:
    """Test the text and JSON output of spectrum status"""
    assert main(['spectrum', 'status', '--k', '4', '--r', '4']) == EXIT_OK
    assert 'nonexistent' in capsys.readouterr().out
    assert main(['spectrum', 'status', '--k', '4', '--r', '13', '--format', 'json']) == EXIT_OK
    payload = json.loads(capsys.readouterr().out)
    assert payload['status'] == 'exists_no_olp'
    assert payload['layer'] == 'catalog'
    assert payload['no_olp']['status'] == 'exists_no_olp'


def test_verify_catalog(capsys) -> None:
    """Test verification of a catalog id"""
    assert main(['verify', 'PENT-4-13']) == EXIT_OK
    out = capsys.readouterr().out
    assert out.startswith('PENT-4-13: VALID PENT')


def test_verify_broken_file(tmp_path, capsys) -> None:
    """Test that an invalid design gives exit code 2"""
    path = tmp_path / 'broken.txt'
    path.write_text(BROKEN_PENTAGON)
    assert main(['verify', str(path)]) == EXIT_INVALID
    assert 'INVALID' in capsys.readouterr().out
    assert main(['verify', str(tmp_path / 'missing.txt')]) == EXIT_USAGE


def test_construct_pent3(tmp_path, capsys) -> None:
    """Test writing PENT(3, 33) to a file and verifying it"""
    path = tmp_path / 'pent3.txt'
    assert main(['construct', 'pent3', '--m', '5', '-o', str(path)]) == EXIT_OK
    assert capsys.readouterr().out == ''
    design_file = load_design(str(path))
    assert design_file.kind == 'PENT'
    npt.assert_equal(design_file.r, 33)
    assert verify_pent(design_file.design, 3, 33).valid
    assert main(['verify', str(path), '--format', 'json']) == EXIT_OK
    assert json.loads(capsys.readouterr().out)['valid']


def test_mset_decompose(capsys) -> None:
    """Test the witness of a weight decomposition"""
    arguments = ['construct', 'mset', '--family', '40', '--g', '2', '--q', '83',
                 '--decompose', '1890', '--format', 'json']
    assert main(arguments) == EXIT_OK
    payload = json.loads(capsys.readouterr().out)
    assert payload['witness'] == {'26': 71, '6': 5, '2': 7}


def test_construct_td(tmp_path, capsys) -> None:
    """Test construct td with block size and side"""
    path = tmp_path / 'td.txt'
    assert main(['construct', 'td', '--k', '5', '--q', '7', '-o', str(path)]) == EXIT_OK
    design_file = load_design(str(path))
    npt.assert_equal(design_file.design.v, 35)
    npt.assert_equal(design_file.design.b, 49)
    assert main(['construct', 'td', '--k', '5', '--n', '7']) == EXIT_USAGE


def test_mset_family(capsys) -> None:
    """Test construct mset by weight family"""
    arguments = ['construct', 'mset', '--family', '40', '--g', '2', '--q', '43',
                 '--format', 'json']
    assert main(arguments) == EXIT_OK
    payload = json.loads(capsys.readouterr().out)
    assert payload['family'] == '40'
    npt.assert_equal(min(payload['values']), 86)
    npt.assert_equal(max(payload['values']), 1118)
    assert 1046 in payload['values']
    assert main(['construct', 'mset', '--family', '10', '--g', '10', '--q', '43']) == EXIT_OK
    values = [int(value) for value in capsys.readouterr().out.split()]
    assert (min(values), max(values)) == (430, 1290)


def test_diffcensus(capsys) -> None:
    """Test the difference census of PENT(3, 33)"""
    assert main(['diffcensus', '--m', '5', '--format', 'json']) == EXIT_OK
    payload = json.loads(capsys.readouterr().out)
    npt.assert_equal(payload['q'], 35)
    npt.assert_equal(len(payload['differences']), 69)
    assert set(payload['differences'].values()) == {1}


def test_plan53(capsys) -> None:
    """Test the TD-patched PENT(5) planner on the command line"""
    assert main(['spectrum', 'plan53', '--g', '2', '--u', '40', '--q', '43']) == EXIT_OK
    assert capsys.readouterr().out.strip() == '880 1066'


if __name__ == '__main__':
    pytest.main(sys.argv)
