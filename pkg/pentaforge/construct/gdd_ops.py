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
"""Recursive GDD constructions: inflation, augmentation of resolvable designs and TD patching.

New labels are assigned group-major in ascending order: the copies of an old point x form a
consecutive range, and the ranges follow the order of the old labels.

"""

import logging
from typing import (
    Dict,
    Iterable,
    List,
    Mapping,
    Optional,
    Sequence,
)
import numpy as np
from pentaforge.construct._verified import checked_gdd
from pentaforge.construct.fields import transversal_design
from pentaforge.core._exceptions import (
    IngredientError,
    ParamError,
    ResolutionError,
)
from pentaforge.core.design import Gdd
from pentaforge.core.gdd_type import GddType
from pentaforge.verify.gdd import verify_resolution

logger = logging.getLogger(__name__)


def _weighted_labels(weights: Sequence[int]) -> np.ndarray:
    # start label of the copies of every old point
    return np.concatenate([[0], np.cumsum(weights)[:-1]]).astype(np.int64)


def _fill_block(cells: Sequence[Sequence[int]],
                filler: Gdd,
                filler_groups: Sequence[Sequence[int]]) -> List[List[int]]:
    """Map the blocks of filler onto the cells of the points of a block

    filler_groups[i] lists the filler points mapped in order onto cells[i].
    """
    image: Dict[int, int] = {}
    for cell, group in zip(cells, filler_groups):
        for target, point in zip(cell, group):
            image[point] = target
    return [[image[point] for point in filler_block] for filler_block in filler]


def inflate(gdd: Gdd,
            h: int,
            cell_filler: Optional[Gdd] = None,
            verify: bool = True) -> Gdd:
    """Replace every point by h copies and every block by a k-GDD of type h^k

    Point x becomes x h, ..., x h + h - 1. The filler defaults to a TD(k, h) from
    :func:`transversal_design`.

    Args:
        gdd: k-GDD of type g_1^u_1 ...
        h: inflation factor
        cell_filler: k-GDD of type h^k
        verify: verify the output before returning it

    Returns:
        Gdd: k-GDD of type (g_1 h)^u_1 ...

    Raises:
        IngredientError: no filler given and no TD(k, h) can be built
        ParamError: the filler is not of type h^k
    """
    k = gdd.k
    if cell_filler is None:
        cell_filler = transversal_design(k, h)
    if cell_filler.gdd_type != GddType({h: k}) or cell_filler.k != k:
        raise ParamError('Inflation needs a k-GDD of type h^k', h=h, k=k,
                         found=str(cell_filler.gdd_type))
    cells = [list(range(x * h, (x + 1) * h)) for x in range(gdd.v)]
    blocks = []
    for block in gdd:
        blocks.extend(_fill_block([cells[x] for x in block], cell_filler, cell_filler.groups))
    groups = [[label for x in group for label in cells[x]] for group in gdd.groups]
    result = Gdd(gdd.v * h, blocks, groups, k)
    logger.debug('Inflated %s by %d to %s', gdd.gdd_type, h, result.gdd_type)
    if verify:
        checked_gdd(result, 'inflate({}, h={})'.format(gdd.gdd_type, h))
    return result


def rgdd_to_gdd(rgdd: Gdd, verify: bool = True) -> Gdd:
    """Add one new point per parallel class to its blocks; the new points form a group

    A resolvable k-GDD of type g^u with d parallel classes becomes a (k + 1)-GDD of type
    g^u d^1. The new point of class i is v + i.

    Args:
        rgdd: resolvable GDD with its resolution
        verify: verify the output before returning it

    Returns:
        Gdd

    Raises:
        ResolutionError: the design has no valid resolution
    """
    classes = rgdd.resolution
    if classes is None or not verify_resolution(rgdd, classes):
        raise ResolutionError('Design has no valid resolution', type=str(rgdd.gdd_type))
    v = rgdd.v
    blocks: List[List[int]] = [[] for _ in range(rgdd.b)]
    for number, cls in enumerate(classes):
        for index in cls:
            blocks[index] = list(rgdd[index]) + [v + number]
    groups = [list(group) for group in rgdd.groups] + [list(range(v, v + len(classes)))]
    result = Gdd(v + len(classes), blocks, groups, rgdd.k + 1)
    if verify:
        checked_gdd(result, 'rgdd_to_gdd({})'.format(rgdd.gdd_type))
    return result


def td_patch_gdd(base: Gdd,
                 g: int,
                 weights: Sequence[int],
                 fillers: Mapping[int, Gdd],
                 weight_set: Optional[Iterable[int]] = None,
                 group: int = -1,
                 verify: bool = True) -> Gdd:
    """Weight one group of a TD by weights d_1..d_q and every other point by g

    Every block of base meets the selected group in one point y of weight d; it is replaced by
    the filler of type g^u d^1 whose d-group is mapped onto the copies of y. The result has
    type (g q)^u (d_1 + ... + d_q)^1.

    Args:
        base: (u + 1)-GDD of type q^(u + 1)
        g: weight of the points outside the selected group
        weights: one weight per point of the selected group, in ascending point order
        fillers: k-GDD of type g^u d^1 keyed by d
        weight_set: admissible weights D, checked when given
        group: index of the selected group in base.groups
        verify: verify the output before returning it

    Returns:
        Gdd

    Raises:
        ParamError: wrong number of weights, a weight outside D, or base is not a TD
        IngredientError: no filler for some weight
    """
    selected = list(base.groups[group])
    q = len(selected)
    if len(weights) != q:
        raise ParamError('Need one weight per point of the selected group',
                         expected=q, found=len(weights))
    allowed = None if weight_set is None else set(weight_set)
    u = len(base.groups) - 1
    point_weight = np.full(base.v, g, dtype=np.int64)
    for point, weight in zip(selected, weights):
        if allowed is not None and weight not in allowed:
            raise ParamError('Weight is not in the weight set', weight=weight)
        point_weight[point] = weight
    k = None
    filler_groups: Dict[int, List[Sequence[int]]] = {}
    for weight in sorted(set(weights)):
        if weight not in fillers:
            raise IngredientError('Missing filler for a weight',
                                  missing='GDD of type {}^{} {}^1'.format(g, u, weight))
        filler = fillers[weight]
        if filler.gdd_type != GddType([(g, u), (weight, 1)]):
            raise ParamError('Filler has the wrong type', weight=weight,
                             found=str(filler.gdd_type))
        k = filler.k if k is None else k
        if filler.k != k:
            raise ParamError('Fillers have different block sizes')
        # the weight group is the last group of that size
        ordered = list(filler.groups)
        last = max(i for i, grp in enumerate(ordered) if len(grp) == weight)
        weight_group = ordered.pop(last)
        filler_groups[weight] = ordered + [weight_group]
    starts = _weighted_labels(point_weight)
    cells = [list(range(int(starts[x]), int(starts[x] + point_weight[x])))
             for x in range(base.v)]
    selected_set = set(selected)
    blocks = []
    for block in base:
        inside = [x for x in block if x in selected_set]
        if len(inside) != 1:
            raise ParamError('Every block must meet the selected group once', block=block)
        outside = [x for x in block if x not in selected_set]
        weight = int(point_weight[inside[0]])
        blocks.extend(_fill_block([cells[x] for x in outside] + [cells[inside[0]]],
                                  fillers[weight], filler_groups[weight]))
    groups = [[label for x in grp for label in cells[x]] for grp in base.groups]
    result = Gdd(int(point_weight.sum()), blocks, groups, k)
    logger.debug('TD patch of %s gives %s', base.gdd_type, result.gdd_type)
    if verify:
        checked_gdd(result, 'td_patch_gdd({}, g={})'.format(base.gdd_type, g))
    return result
