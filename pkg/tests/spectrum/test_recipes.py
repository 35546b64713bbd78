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
"""Testing the PENT(4) recipe and ingredient tables"""

import pytest
import sys
import numpy.testing as npt
from pentaforge.spectrum import (
    RecipeRow,
    IngredientRow,
    NO_OLP_WEAK,
    NO_OLP_STRONG,
    ONE_OLP,
    RECIPE_TABLES,
    WEAK_INGREDIENTS,
    MISSING_INGREDIENTS,
    ONE_OLP_INGREDIENTS,
    DIRECT_PENT4_BASIC,
    DIRECT_PENT4_EXTRA,
    recipe_check,
    ingredient_check,
    uncovered_values,
    largest_uncovered,
    no_olp_exceptions,
)
from pentaforge.core import (
    GddType,
    RecipeError,
)

EXCEPTIONS = (8, 9, 12, 16, 25, 28, 32, 36, 41, 44, 48, 56, 64, 68, 72, 73, 76, 84, 88, 89, 92,
              96, 104, 113, 116, 124, 128, 137, 144, 148, 164, 168, 212, 308)


@pytest.mark.parametrize("name, row", [(name, row) for name, rows in RECIPE_TABLES.items()
                                       for row in rows])
def test_recipe_rows(name, row) -> None:
    """Test the arithmetic of every recipe row"""
    check = recipe_check(row)
    npt.assert_equal(check.first_r, 44 * row.w_min + row.s)
    npt.assert_equal(check.first_r % 44, row.residue)


def test_tables_cover_all_residues() -> None:
    """Test that every table has one row per admissible residue mod 44"""
    residues = [rho for rho in range(44) if rho % 4 in (0, 1)]
    for rows in RECIPE_TABLES.values():
        assert [row.residue for row in rows] == residues


def test_recipe_check_output() -> None:
    """Test the 4-GDD type reported for a row"""
    check = recipe_check(RecipeRow(13, 13, 1, 1))
    npt.assert_equal(check.first_r, 57)
    assert check.gdd_type == '44^4'
    assert RecipeRow(0, 132, 7, 10).gdd_type(7) == GddType({44: 21, 401: 1})


@pytest.mark.parametrize("row", [
    RecipeRow(2, 46, 1, 2),
    RecipeRow(0, 133, 7, 10),
    RecipeRow(0, 132, 7, 9),
    RecipeRow(44, 44, 1, 2),
])
def test_recipe_errors(row) -> None:
    """Test rejection of inconsistent rows"""
    with pytest.raises(RecipeError):
        recipe_check(row)


def test_ingredient_rows() -> None:
    """Test every ingredient row with the fillers available to its table"""
    strong = {row.s for row in NO_OLP_STRONG} | set(DIRECT_PENT4_EXTRA)
    for row in WEAK_INGREDIENTS:
        ingredient_check(row, DIRECT_PENT4_BASIC)
    for row in MISSING_INGREDIENTS + ONE_OLP_INGREDIENTS:
        gdd_type = ingredient_check(row, strong)
        npt.assert_equal(gdd_type.points, 3 * row.r + 5)


def test_ingredient_tables_match_recipes() -> None:
    """Test that the ingredient tables explain the non-direct s of the recipe tables"""
    weak = {row.s for row in NO_OLP_WEAK} - set(DIRECT_PENT4_BASIC)
    assert weak == {row.r for row in WEAK_INGREDIENTS}
    one = {row.s for row in ONE_OLP} - {1}
    assert one == {row.r for row in ONE_OLP_INGREDIENTS}
    assert all(row.q == 1 for row in ONE_OLP_INGREDIENTS)


def test_ingredient_check_output() -> None:
    """Test the 4-GDD type of an ingredient row"""
    assert ingredient_check(IngredientRow(132, 6, 17, 20)) == GddType({56: 6, 65: 1})
    assert ingredient_check(IngredientRow(137, 6, 21, 1)) == '68^6 8^1'


@pytest.mark.parametrize("row, available", [
    (IngredientRow(132, 5, 17, 20), None),
    (IngredientRow(133, 6, 17, 20), None),
    (IngredientRow(176, 6, 21, 40), DIRECT_PENT4_BASIC),
])
def test_ingredient_errors(row, available) -> None:
    """Test rejection of wrong arithmetic and unavailable fillers"""
    with pytest.raises(RecipeError):
        ingredient_check(row, available)


def test_uncovered_values() -> None:
    """Test the values left open by the recipe tables"""
    weak = uncovered_values(NO_OLP_WEAK)
    npt.assert_equal(len(weak), 181)
    npt.assert_equal(max(weak), 920)
    npt.assert_equal(largest_uncovered(NO_OLP_WEAK), 920)
    npt.assert_equal(largest_uncovered(ONE_OLP), 9172)
    assert 13 not in weak
    assert all(r % 4 in (0, 1) for r in weak)
    with pytest.raises(RecipeError):
        uncovered_values(NO_OLP_WEAK[1:])


def test_no_olp_exceptions() -> None:
    """Test the list of open PENT(4, r) without opposite line pair"""
    assert no_olp_exceptions() == EXCEPTIONS
    assert max(no_olp_exceptions()) == 308


if __name__ == '__main__':
    pytest.main(sys.argv)
