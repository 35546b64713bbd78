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
"""Direct construction of PENT(3, 6m + 3) with connected deficiency graph.

Points x_j of Z_q x Z_2, q = 6m + 5, are flattened to x + q j; the automorphism
x_j -> (x + 1)_j acts on both halves.

"""

import logging
from typing import (
    List,
    Tuple,
)
from pentaforge.autogen.automorphism import (
    AutomorphismSpec,
    develop,
)
from pentaforge.construct._verified import checked_pent
from pentaforge.construct.langford import skew_triples
from pentaforge.core._exceptions import ParameterRangeError
from pentaforge.core.design import Design

logger = logging.getLogger(__name__)

PartPoint = Tuple[int, int]


def _modulus(m: int) -> int:
    if m < 5:
        raise ParameterRangeError('The PENT(3, 6m + 3) construction needs m >= 5', m=m)
    return 6 * m + 5


def pent3_base_blocks(m: int) -> List[List[PartPoint]]:
    """Return the 4m + 2 base blocks as points (x, part)

    The two opposite lines come first, then {0_0, i_0, (i/2)_1} for i = 1, 3, 5, 6, ..., 3m + 2,
    then {0_1, x_1, z_1} for (0, x, z) in the skew triples.

    Args:
        m: family parameter, at least 5

    Returns:
        List[List[PartPoint]]
    """
    q = _modulus(m)
    half = (q + 1) // 2
    blocks = [[(0, 1), (2, 0), (q - 2, 0)],
              [(0, 0), (1, 1), (q - 1, 1)]]
    blocks += [[(0, 0), (i, 0), ((i * half) % q, 1)]
               for i in range(1, 3 * m + 3) if i not in (2, 4)]
    blocks += [[(0, 1), (triple.x, 1), (triple.z, 1)] for triple in skew_triples(m)]
    return blocks


def pent3_deficiency_edges(m: int) -> List[List[PartPoint]]:
    """Return the edges {0_0, 0_1}, {0_1, 1_1}, {0_0, 2_0} generating the deficiency graph

    Args:
        m: family parameter, at least 5

    Returns:
        List[List[PartPoint]]
    """
    _modulus(m)
    return [[(0, 0), (0, 1)], [(0, 1), (1, 1)], [(0, 0), (2, 0)]]


def pent3_automorphism(m: int) -> AutomorphismSpec:
    """Return x_j -> (x + 1)_j on the flattened point set

    Args:
        m: family parameter, at least 5

    Returns:
        AutomorphismSpec
    """
    q = _modulus(m)
    return AutomorphismSpec([(0, q, 1), (q, q, 1)], q)


def flatten(point: PartPoint, q: int) -> int:
    """Return the label x + q j of x_j

    Args:
        point: (x, j)
        q: modulus

    Returns:
        int
    """
    return point[0] % q + q * point[1]


def pent3_direct(m: int, verify: bool = True) -> Design:
    """Build the PENT(3, 6m + 3) on 12m + 10 points

    Args:
        m: family parameter, at least 5
        verify: verify the output before returning it

    Returns:
        Design

    Raises:
        ConstructionError: the output fails verification
    """
    q = _modulus(m)
    base = [[flatten(point, q) for point in block] for block in pent3_base_blocks(m)]
    design = Design(2 * q, develop(base, pent3_automorphism(m)))
    logger.debug('PENT(3,%d): %d blocks on %d points', 6 * m + 3, design.b, design.v)
    if verify:
        checked_pent(design, 3, 6 * m + 3, 'pent3_direct(m={})'.format(m))
    return design
