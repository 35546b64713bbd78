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
"""Verification of group divisible designs and resolutions"""

import logging
from typing import (
    Any,
    Dict,
    Iterable,
    List,
    Optional,
    Sequence,
)
import numpy as np
import pandas as pd
from hqsbase.qonfig import Qonfig
from pentaforge.core._exceptions import ParamError
from pentaforge.core.design import (
    Design,
    Gdd,
)
from pentaforge.core.gdd_type import (
    format_gdd_type,
    type_of_groups,
)
from pentaforge.verify.pairs import pair_counts

logger = logging.getLogger(__name__)

_SHOWN = 10


class GddReport(object):
    """Outcome of checking a design against the axioms of a k-GDD (and optionally a resolution)"""

    _qonfig_defaults_dict = {
        'k': {'doc': 'Block size', 'default': 0},
        'gdd_type': {'doc': 'Group type in exponent notation', 'default': ''},
        'v': {'doc': 'Number of points', 'default': 0},
        'b': {'doc': 'Number of blocks', 'default': 0},
        'resolution_valid': {'doc': 'Resolution check result, None if not checked',
                             'default': None},
        'violations': {'doc': 'Description of every failed check', 'default': None},
    }
    _qonfig_never_receives_values = True

    def __init__(self,
                 k: int,
                 gdd_type: str,
                 v: int,
                 b: int,
                 resolution_valid: Optional[bool] = None,
                 violations: Optional[Sequence[str]] = None) -> None:
        """Initialize the report

        Args:
            k: block size
            gdd_type: group type in exponent notation
            v: number of points
            b: number of blocks
            resolution_valid: result of the resolution check, None when not checked
            violations: failed checks
        """
        self.k = k
        self.gdd_type = gdd_type
        self.v = v
        self.b = b
        self.resolution_valid = resolution_valid
        self.violations = list(violations or [])

    @classmethod
    def from_qonfig(cls,
                    config: Qonfig['GddReport']
                    ) -> 'GddReport':
        """Create an Instance from Qonfig

        Args:
            config: Qonfig of class

        Returns:
            GddReport
        """
        return cls(k=config['k'], gdd_type=config['gdd_type'], v=config['v'], b=config['b'],
                   resolution_valid=config['resolution_valid'],
                   violations=config['violations'])

    def to_qonfig(self) -> 'Qonfig[GddReport]':
        """Create a Qonfig from Instance

        Returns:
            Qonfig[GddReport]
        """
        config = Qonfig(self.__class__)
        for key in self._qonfig_defaults_dict:
            config[key] = getattr(self, key)
        return config

    @property
    def valid(self) -> bool:
        """True when no violation was found and a checked resolution is valid

        Returns:
            bool
        """
        return not self.violations and self.resolution_valid is not False

    def to_dict(self) -> Dict[str, Any]:
        """Return the machine readable verification summary

        Returns:
            Dict[str, Any]
        """
        return {'valid': self.valid,
                'kind': 'GDD' if self.resolution_valid is None else 'RGDD',
                'k': self.k,
                'type': self.gdd_type,
                'v': self.v,
                'b': self.b,
                'violations': list(self.violations)}

    def to_pd_series(self) -> pd.Series:
        """Return the summary as a pandas Series

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
        lines = ['{}-GDD of type {} v={} b={}: {}'.format(
            self.k, self.gdd_type, self.v, self.b, 'valid' if self.valid else 'INVALID')]
        if self.resolution_valid is not None:
            lines.append('resolution: {}'.format('valid' if self.resolution_valid else 'INVALID'))
        lines.extend('violation: {}'.format(violation) for violation in self.violations)
        return '\n'.join(lines)


def _pairs(mask: np.ndarray) -> List[tuple]:
    rows, cols = np.nonzero(mask)
    return [(int(x), int(y)) for x, y in zip(rows[:_SHOWN], cols[:_SHOWN])]


def verify_gdd(design: Design, k: int, groups: Optional[Sequence[Iterable[int]]] = None
               ) -> GddReport:
    """Check that design is a k-GDD with the given groups

    Every block must have k points, no block may contain two points of a group, and every
    pair of points from distinct groups must lie on exactly one block.

    Args:
        design: the design
        k: block size
        groups: partition of the points, taken from design when it is a Gdd

    Returns:
        GddReport

    Raises:
        PartitionError: groups do not partition the point set
        ParamError: no groups given for a plain Design
    """
    if groups is None:
        if not isinstance(design, Gdd):
            raise ParamError('Groups are needed to verify a plain Design', v=design.v)
        groups = design.groups
    groups = [list(group) for group in groups]
    gdd_type = type_of_groups(groups, design.v)
    violations = []
    wrong_size = [index for index, block in enumerate(design) if len(block) != k]
    if wrong_size:
        violations.append('{} blocks of size other than {}, e.g. {}'.format(
            len(wrong_size), k, wrong_size[:_SHOWN]))
    group_of = np.empty(design.v, dtype=np.int64)
    for number, group in enumerate(groups):
        group_of[group] = number
    counts = pair_counts(design)
    upper = np.triu(np.ones((design.v, design.v), dtype=bool), 1)
    same_group = (group_of[:, None] == group_of[None, :]) & upper
    cross = ~(group_of[:, None] == group_of[None, :]) & upper
    inside = same_group & (counts > 0)
    if inside.any():
        violations.append('{} pairs inside a group covered, e.g. {}'.format(
            int(inside.sum()), _pairs(inside)))
    uncovered = cross & (counts == 0)
    if uncovered.any():
        violations.append('{} cross-group pairs uncovered, e.g. {}'.format(
            int(uncovered.sum()), _pairs(uncovered)))
    multiple = cross & (counts > 1)
    if multiple.any():
        violations.append('{} cross-group pairs covered more than once, e.g. {}'.format(
            int(multiple.sum()), _pairs(multiple)))
    report = GddReport(k=k, gdd_type=format_gdd_type(gdd_type), v=design.v, b=design.b,
                       violations=violations)
    logger.debug('Verified %d-GDD of type %s: %s', k, report.gdd_type,
                 'valid' if report.valid else 'invalid')
    return report


def verify_resolution(design: Design, classes: Sequence[Iterable[int]]) -> bool:
    """Return True when the classes partition the blocks into parallel classes

    Args:
        design: the design
        classes: lists of block indices

    Returns:
        bool
    """
    classes = [list(cls) for cls in classes]
    used = sorted(index for cls in classes for index in cls)
    if used != list(range(design.b)):
        return False
    for cls in classes:
        points = sorted(point for index in cls for point in design[index])
        if points != list(range(design.v)):
            return False
    return True


def verify_rgdd(design: Design,
                k: int,
                groups: Optional[Sequence[Iterable[int]]] = None,
                classes: Optional[Sequence[Iterable[int]]] = None) -> GddReport:
    """Check a resolvable GDD: verify_gdd plus verify_resolution

    Args:
        design: the design
        k: block size
        groups: partition of the points, taken from design when it is a Gdd
        classes: parallel classes, taken from design when it is a resolved Gdd

    Returns:
        GddReport

    Raises:
        ParamError: no classes given and the design carries no resolution
    """
    if classes is None:
        if not isinstance(design, Gdd) or design.resolution is None:
            raise ParamError('Parallel classes are needed to verify a resolution', v=design.v)
        classes = design.resolution
    report = verify_gdd(design, k, groups)
    report.resolution_valid = verify_resolution(design, classes)
    if not report.resolution_valid:
        report.violations.append('blocks do not split into parallel classes')
    return report
