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
"""Arithmetic replay of the PENT(4) recipe and ingredient tables"""

import logging
from functools import lru_cache
from typing import (
    Iterable,
    List,
    NamedTuple,
    Optional,
    Sequence,
    Tuple,
)
from pentaforge.core._exceptions import (
    ParamError,
    RecipeError,
)
from pentaforge.core.gdd_type import GddType
from pentaforge.spectrum.arithmetic import theorem22_params
from pentaforge.spectrum.tables import (
    DIRECT_PENT4_EXTRA,
    MISSING_INGREDIENTS,
    NO_OLP_STRONG,
    IngredientRow,
    RecipeRow,
)

logger = logging.getLogger(__name__)

#: PENT(4, r) without opposite line pair that cannot exist
NONEXISTENT_NO_OLP_PENT4 = (1, 4, 5)

_CHECKED_W = 3


class RecipeCheck(NamedTuple):
    """Outcome of a passed recipe_check"""

    residue: int
    s: int
    w_min: int
    t_min: int
    first_r: int
    gdd_type: str


def recipe_check(row: RecipeRow) -> RecipeCheck:
    """Check the arithmetic of a recipe row

    3w copies of PENT(4, 13) and one PENT(4, s) overlaid on a 4-GDD of type
    44^{3w} (3s + 5)^1 give a PENT(4, 44w + s); the row claims r = 44t + residue for
    t >= t_min with t = w + floor(s/44).

    Args:
        row: recipe row

    Returns:
        RecipeCheck

    Raises:
        RecipeError: any part of the arithmetic fails
    """
    if row.residue % 4 not in (0, 1) or not 0 <= row.residue < 44:
        raise RecipeError('Residue is not admissible mod 44', residue=row.residue)
    if row.s % 44 != row.residue:
        raise RecipeError('s is not congruent to the residue', residue=row.residue, s=row.s)
    if row.t_min != row.w_min + row.s // 44:
        raise RecipeError('t_min does not correspond to w_min',
                          residue=row.residue, w_min=row.w_min, t_min=row.t_min)
    for w in range(row.w_min, row.w_min + _CHECKED_W):
        r = theorem22_params(3 * w + 1, 39 * w + row.s, 4)
        if r != row.r(w):
            raise RecipeError('Overlay replication differs from 44w + s',
                              residue=row.residue, w=w, r=r)
        gdd_type = row.gdd_type(w)
        if gdd_type.points != 3 * r + 5:
            raise RecipeError('4-GDD does not have 3r + 5 points',
                              residue=row.residue, w=w, gdd_type=gdd_type)
    logger.debug('Recipe row %d passed', row.residue)
    return RecipeCheck(row.residue, row.s, row.w_min, row.t_min, row.first_r,
                       str(row.gdd_type(row.w_min)))


def ingredient_check(row: IngredientRow,
                     available: Optional[Iterable[int]] = None) -> GddType:
    """Check the arithmetic of an ingredient row and return its 4-GDD type

    Args:
        row: ingredient row
        available: replication numbers of the PENT(4, .) that may be used as fillers;
                   the degenerate PENT(4, 1) is always available

    Returns:
        GddType: (3p + 5)^u (3q + 5)^1

    Raises:
        RecipeError: r differs from up + q + 5u/3 or a filler is not available
    """
    try:
        r = theorem22_params(row.u + 1, row.u * row.p + row.q, 4)
    except ParamError as error:
        raise RecipeError('u must be divisible by 3', r=row.r, u=row.u) from error
    if r != row.r:
        raise RecipeError('Ingredient row does not give r', r=row.r, computed=r)
    gdd_type = row.gdd_type()
    if gdd_type.points != 3 * r + 5 or gdd_type.group_count != row.u + 1:
        raise RecipeError('4-GDD type does not match', r=row.r, gdd_type=gdd_type)
    if available is not None:
        allowed = set(available) | {1}
        missing = sorted({row.p, row.q} - allowed)
        if missing:
            raise RecipeError('Filler PENT(4, r) not available', r=row.r, missing=missing)
    return gdd_type


def uncovered_values(table: Sequence[RecipeRow],
                     direct: Optional[Iterable[int]] = None) -> List[int]:
    """Return the admissible r >= 1 that a recipe table does not produce

    A row produces 44w + s for every w >= w_min. Values in ``direct``, by default the s of the
    table's rows, count as produced.

    Args:
        table: recipe rows, one per admissible residue mod 44
        direct: replication numbers available without the table

    Returns:
        List[int]

    Raises:
        RecipeError: the table misses a residue
    """
    bounds = {row.residue: row.first_r for row in table}
    missing = [rho for rho in range(44) if rho % 4 in (0, 1) and rho not in bounds]
    if missing:
        raise RecipeError('Recipe table misses residues', residues=missing)
    produced = set(row.s for row in table) if direct is None else set(direct)
    return [r for r in range(1, max(bounds.values()))
            if r % 4 in (0, 1) and r < bounds[r % 44] and r not in produced]


def largest_uncovered(table: Sequence[RecipeRow]) -> int:
    """Return the largest admissible r the recipe table does not produce

    Args:
        table: recipe rows

    Returns:
        int
    """
    return max(uncovered_values(table))


@lru_cache(maxsize=None)
def no_olp_exceptions() -> Tuple[int, ...]:
    """Return the r for which a PENT(4, r) without opposite line pair is not known

    These are the values left by the strong recipe table after removing the directly
    constructed geometries, the values built from ingredient rows and the three
    nonexistent cases.

    Returns:
        Tuple[int, ...]
    """
    removed = (set(DIRECT_PENT4_EXTRA) | {row.r for row in MISSING_INGREDIENTS}
               | set(NONEXISTENT_NO_OLP_PENT4))
    return tuple(r for r in uncovered_values(NO_OLP_STRONG) if r not in removed)
