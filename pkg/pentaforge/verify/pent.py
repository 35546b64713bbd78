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
"""Verification of pentagonal geometries"""

import logging
from typing import (
    Any,
    Dict,
    List,
    Mapping,
    Optional,
    Sequence,
    Tuple,
)
import numpy as np
import pandas as pd
from hqsbase.qonfig import Qonfig
from pentaforge.core._exceptions import ParamError
from pentaforge.core.design import Design
from pentaforge.core.params import (
    PentParams,
    pent_params,
)
from pentaforge.verify.graphs import (
    DeficiencyReport,
    deficiency_graph,
)
from pentaforge.verify.pairs import (
    collinearity,
    repeated_blocks,
    verify_pls,
)

logger = logging.getLogger(__name__)

_SHOWN = 10


def _listing(items: Sequence[Any]) -> str:
    shown = ', '.join(str(item) for item in items[:_SHOWN])
    if len(items) > _SHOWN:
        shown += ', ... ({} in total)'.format(len(items))
    return shown


def opposite_line_map(design: Design,
                      collinear: Optional[np.ndarray] = None) -> List[int]:
    """Return for every point x the index of the block x^opp, or -1 when there is none

    x^opp is the block equal to the set of points other than x not collinear with x. When a
    block is repeated the first occurrence is used.

    Args:
        design: the design
        collinear: precomputed collinearity matrix

    Returns:
        List[int]
    """
    if collinear is None:
        collinear = collinearity(design)
    block_index: Dict[Tuple[int, ...], int] = {}
    for index, block in enumerate(design):
        block_index.setdefault(block, index)
    opp = []
    for x in range(design.v):
        row = ~collinear[x]
        row[x] = False
        key = tuple(int(y) for y in np.nonzero(row)[0])
        opp.append(block_index.get(key, -1))
    return opp


def opposite_line_pairs(design: Design,
                        opp_map: Optional[Sequence[int]] = None) -> List[Tuple[int, int]]:
    """Return the pairs of block indices forming opposite line pairs

    Blocks L and L' form a pair when every point of L has opposite line L' and every point of
    L' has opposite line L.

    Args:
        design: the design
        opp_map: precomputed result of opposite_line_map

    Returns:
        List[Tuple[int, int]]
    """
    if opp_map is None:
        opp_map = opposite_line_map(design)
    pairs = []
    for index, block in enumerate(design):
        targets = {opp_map[x] for x in block}
        if len(targets) != 1:
            continue
        other = targets.pop()
        if other <= index:
            continue
        if all(opp_map[y] == index for y in design[other]):
            pairs.append((index, other))
    return pairs


class PentReport(object):
    """Outcome of checking a design against the axioms of a PENT(k, r).

    Axiom failures are collected in ``violations``; the design is a PENT(k, r) exactly when
    ``valid`` is True.

    """

    _qonfig_defaults_dict = {
        'k': {'doc': 'Block size', 'default': 0},
        'r': {'doc': 'Replication number', 'default': 0},
        'v': {'doc': 'Number of points', 'default': 0},
        'b': {'doc': 'Number of blocks found', 'default': 0},
        'is_pls': {'doc': 'Every pair lies on at most one block', 'default': False},
        'is_uniform_k': {'doc': 'Every block has k points', 'default': False},
        'is_regular_r': {'doc': 'Every point lies on r blocks', 'default': False},
        'opposite_axiom_holds': {'doc': 'Every point has an opposite line', 'default': False},
        'opp_map': {'doc': 'Block index of x^opp per point, -1 if missing', 'default': None},
        'olp_pairs': {'doc': 'Opposite line pairs as block index pairs', 'default': None},
        'deficiency': {'doc': 'Qonfig of the DeficiencyReport', 'default': None},
        'violations': {'doc': 'Description of every failed check', 'default': None},
    }
    _qonfig_never_receives_values = True

    def __init__(self,
                 k: int,
                 r: int,
                 v: int,
                 b: int,
                 is_pls: bool,
                 is_uniform_k: bool,
                 is_regular_r: bool,
                 opposite_axiom_holds: bool,
                 opp_map: Sequence[int],
                 olp_pairs: Sequence[Sequence[int]],
                 deficiency: DeficiencyReport,
                 violations: Optional[Sequence[str]] = None) -> None:
        """Initialize the report

        Args:
            k: block size
            r: replication number
            v: number of points
            b: number of blocks found
            is_pls: every pair on at most one block
            is_uniform_k: every block of size k
            is_regular_r: every point on r blocks
            opposite_axiom_holds: every point has an opposite line
            opp_map: block index of x^opp for every point x
            olp_pairs: opposite line pairs
            deficiency: analysis of the deficiency graph
            violations: failed checks
        """
        self.k = k
        self.r = r
        self.v = v
        self.b = b
        self.is_pls = is_pls
        self.is_uniform_k = is_uniform_k
        self.is_regular_r = is_regular_r
        self.opposite_axiom_holds = opposite_axiom_holds
        self.opp_map = list(opp_map)
        self.olp_pairs = [tuple(pair) for pair in olp_pairs]
        self.deficiency = deficiency
        self.violations = list(violations or [])

    @classmethod
    def from_qonfig(cls,
                    config: Qonfig['PentReport']
                    ) -> 'PentReport':
        """Create an Instance from Qonfig

        Args:
            config: Qonfig of class

        Returns:
            PentReport
        """
        return cls(k=config['k'], r=config['r'], v=config['v'], b=config['b'],
                   is_pls=config['is_pls'], is_uniform_k=config['is_uniform_k'],
                   is_regular_r=config['is_regular_r'],
                   opposite_axiom_holds=config['opposite_axiom_holds'],
                   opp_map=config['opp_map'], olp_pairs=config['olp_pairs'],
                   deficiency=config['deficiency'].to_instance(),
                   violations=config['violations'])

    def to_qonfig(self) -> 'Qonfig[PentReport]':
        """Create a Qonfig from Instance

        Returns:
            Qonfig[PentReport]
        """
        config = Qonfig(self.__class__)
        for key in ('k', 'r', 'v', 'b', 'is_pls', 'is_uniform_k', 'is_regular_r',
                    'opposite_axiom_holds', 'opp_map', 'violations'):
            config[key] = getattr(self, key)
        config['olp_pairs'] = [list(pair) for pair in self.olp_pairs]
        config['deficiency'] = self.deficiency.to_qonfig()
        return config

    @property
    def params(self) -> PentParams:
        """Parameters of the PENT(k, r) checked against

        Returns:
            PentParams
        """
        return pent_params(self.k, self.r)

    @property
    def olp_count(self) -> int:
        """Number of opposite line pairs

        Returns:
            int
        """
        return len(self.olp_pairs)

    @property
    def valid(self) -> bool:
        """True when every axiom holds and no violation was recorded

        Returns:
            bool
        """
        return (self.is_pls and self.is_uniform_k and self.is_regular_r
                and self.opposite_axiom_holds and not self.violations)

    def to_dict(self) -> Dict[str, Any]:
        """Return the machine readable verification summary

        Returns:
            Dict[str, Any]
        """
        return {'valid': self.valid,
                'kind': 'PENT',
                'k': self.k,
                'r': self.r,
                'v': self.v,
                'b': self.b,
                'olp_count': self.olp_count,
                'girth': self.deficiency.girth,
                'connected': self.deficiency.connected,
                'violations': list(self.violations)}

    def to_pd_series(self) -> pd.Series:
        """Return the summary as a pandas Series, violations joined into one string

        Returns:
            pd.Series
        """
        summary = self.to_dict()
        summary['violations'] = '; '.join(summary['violations'])
        return pd.Series(summary)

    def __str__(self) -> str:
        """Return a human readable report

        Returns:
            str
        """
        lines = ['PENT({},{}) v={} b={}: {}'.format(self.k, self.r, self.v, self.b,
                                                   'valid' if self.valid else 'INVALID'),
                 'deficiency graph: {}'.format(self.deficiency),
                 'opposite line pairs: {}'.format(self.olp_count)]
        lines.extend('violation: {}'.format(violation) for violation in self.violations)
        return '\n'.join(lines)


def verify_pent(design: Design, k: int, r: int) -> PentReport:
    """Check every axiom of a PENT(k, r) and analyse the deficiency graph

    Args:
        design: the design
        k: block size
        r: replication number

    Returns:
        PentReport

    Raises:
        ParamError: the design has a different number of points than a PENT(k, r)
    """
    params = pent_params(k, r)
    if design.v != params.v:
        raise ParamError('Point count does not match PENT(k, r)', v=design.v, expected=params.v)
    violations = []
    if design.b != params.b:
        violations.append('expected {} blocks, found {}'.format(params.b, design.b))
    repeated = repeated_blocks(design)
    if repeated:
        violations.append('repeated blocks: {}'.format(_listing(repeated)))
    multiple = verify_pls(design)
    if multiple:
        violations.append('pairs on more than one block: {}'.format(
            _listing([(x, y) for x, y, _ in multiple])))
    wrong_size = [index for index, block in enumerate(design) if len(block) != k]
    if wrong_size:
        violations.append('blocks of size other than {}: {}'.format(k, _listing(wrong_size)))
    degrees = design.point_degrees()
    irregular = [int(x) for x in np.nonzero(degrees != r)[0]]
    if irregular:
        violations.append('points not on {} blocks: {}'.format(r, _listing(irregular)))
    collinear = collinearity(design)
    opp_map = opposite_line_map(design, collinear)
    missing = [x for x, index in enumerate(opp_map) if index < 0]
    if missing:
        violations.append('points without opposite line: {}'.format(_listing(missing)))
    deficiency = DeficiencyReport.from_graph(deficiency_graph(design), k)
    pairs = opposite_line_pairs(design, opp_map)
    if not missing and len(pairs) != deficiency.olp_count:
        violations.append('{} opposite line pairs but {} K_(k,k) components'.format(
            len(pairs), deficiency.olp_count))
    report = PentReport(k=k, r=r, v=design.v, b=design.b,
                        is_pls=not multiple and not repeated,
                        is_uniform_k=not wrong_size,
                        is_regular_r=not irregular,
                        opposite_axiom_holds=not missing,
                        opp_map=opp_map,
                        olp_pairs=pairs,
                        deficiency=deficiency,
                        violations=violations)
    logger.debug('Verified PENT(%d,%d): %s', k, r, 'valid' if report.valid else 'invalid')
    return report


def compare_claims(report: PentReport, claims: Mapping[str, Any]) -> List[str]:
    """Compare a report with claimed statistics

    Recognised claim keys are girth, connected, olp and blocks; others are ignored.

    Args:
        report: verification report
        claims: claimed values

    Returns:
        List[str]: one line per mismatch
    """
    found = {'girth': report.deficiency.girth,
             'connected': report.deficiency.connected,
             'olp': report.olp_count,
             'blocks': report.b}
    mismatches = []
    for key, value in claims.items():
        if key not in found:
            continue
        actual = found[key]
        expected = bool(value) if key == 'connected' else value
        if actual != expected:
            mismatches.append('claimed {}={}, found {}'.format(key, value, actual))
    return mismatches
