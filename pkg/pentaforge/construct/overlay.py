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
"""Overlay of the groups of a GDD with pentagonal geometries"""

import logging
from typing import (
    Dict,
    List,
    Mapping,
    Tuple,
)
from pentaforge.construct._verified import checked_pent
from pentaforge.core._exceptions import (
    ConstructionError,
    IngredientError,
    ParamError,
    ParameterRangeError,
)
from pentaforge.core.design import (
    Design,
    Gdd,
)
from pentaforge.core.params import theorem22_params
from pentaforge.verify.pent import opposite_line_pairs

logger = logging.getLogger(__name__)


def degenerate_pent(k: int) -> Design:
    """Return the PENT(k, 1): two disjoint lines {0..k-1} and {k..2k-1} forming one opposite pair

    Args:
        k: block size, at least 2

    Returns:
        Design

    Raises:
        ParameterRangeError: k < 2
    """
    if k < 2:
        raise ParameterRangeError('Degenerate geometries need k >= 2', k=k)
    return Design(2 * k, [range(k), range(k, 2 * k)])


def filler_replication(filler: Design, k: int) -> int:
    """Return r of a PENT(k, r) filler from its point count (k - 1) r + k + 1

    Args:
        filler: the filler design
        k: block size

    Returns:
        int

    Raises:
        ParamError: the point count is not of the form (k - 1) r + k + 1
    """
    r, remainder = divmod(filler.v - k - 1, k - 1)
    if remainder or r < 1:
        raise ParamError('Filler point count is not that of a PENT(k, r)', v=filler.v, k=k)
    return r


def wfc_overlay(gdd: Gdd,
                fillers: Mapping[int, Design],
                verify: bool = True) -> Design:
    """Overlay every group of a k-GDD with a PENT(k, r_i) on the same number of points.

    Point x of the filler of a group becomes the x-th smallest point of the group. With N
    groups and R the sum of the filler replication numbers the result is a
    PENT(k, R + (N - 1)(k + 1)/(k - 1)) whose opposite line pairs are those of the fillers.

    Args:
        gdd: k-GDD whose group sizes all have fillers
        fillers: PENT(k, r_i) keyed by point count
        verify: verify the output before returning it

    Returns:
        Design

    Raises:
        IngredientError: no filler for some group size
        ParamError: a filler has another block size or the target r is not an integer
        ConstructionError: the output fails verification or has an unexpected number of
                           opposite line pairs
    """
    k = gdd.k
    replication: Dict[int, int] = {}
    pairs: Dict[int, int] = {}
    for size in {len(group) for group in gdd.groups}:
        if size not in fillers:
            raise IngredientError('No pentagonal geometry to fill a group',
                                  missing='PENT on {} points'.format(size))
        filler = fillers[size]
        if filler.v != size or filler.block_sizes() != [k]:
            raise ParamError('Filler does not fit the group', size=size, k=k)
        replication[size] = filler_replication(filler, k)
        pairs[size] = len(opposite_line_pairs(filler))
    r_total = sum(replication[len(group)] for group in gdd.groups)
    r = theorem22_params(len(gdd.groups), r_total, k)
    blocks: List[Tuple[int, ...]] = list(gdd)
    for group in gdd.groups:
        for block in fillers[len(group)]:
            blocks.append(tuple(group[x] for x in block))
    design = Design(gdd.v, blocks)
    expected = sum(pairs[len(group)] for group in gdd.groups)
    logger.debug('Overlay of %s: PENT(%d,%d) with %d opposite line pairs expected',
                 gdd.gdd_type, k, r, expected)
    if verify:
        report = checked_pent(design, k, r, 'wfc_overlay({})'.format(gdd.gdd_type))
        if report.olp_count != expected:
            raise ConstructionError('Overlay has an unexpected number of opposite line pairs',
                                    expected=expected, found=report.olp_count)
    return design
