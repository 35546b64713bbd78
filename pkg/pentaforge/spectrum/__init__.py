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
"""Existence spectrum of pentagonal geometries.

Admissibility arithmetic, a layered registry of known existence and nonexistence, and
arithmetic replays of the recipe and construction tables behind the PENT(4) and PENT(5)
existence results. Results resting on designs from the literature are reported as
conditional and never certified.

.. autosummary::
    :toctree: generated/

    admissible
    theorem22_params
    pent5_families
    facts
    ExistenceStatus
    recipe_check
    ingredient_check
    uncovered_values
    largest_uncovered
    no_olp_exceptions
    m40_construction
    m10_construction
    plan_construction53
    plan_jolp
    replay_tables

"""

from pentaforge.spectrum.arithmetic import (
    admissible,
    admissible_residues,
    theorem22_params,
    Pent5Family,
    pent5_families,
)
from pentaforge.spectrum.tables import (
    RecipeRow,
    IngredientRow,
    ConstructionRow,
    NO_OLP_WEAK,
    NO_OLP_STRONG,
    ONE_OLP,
    RECIPE_TABLES,
    WEAK_INGREDIENTS,
    MISSING_INGREDIENTS,
    ONE_OLP_INGREDIENTS,
    INGREDIENT_TABLES,
    DIRECT_PENT4_BASIC,
    DIRECT_PENT4_EXTRA,
    DIRECT_PENT5,
    M40_PUBLISHED,
    M10_PUBLISHED,
    CONSTRUCTION_TABLE,
)
from pentaforge.spectrum.recipes import (
    RecipeCheck,
    recipe_check,
    ingredient_check,
    uncovered_values,
    largest_uncovered,
    no_olp_exceptions,
)
from pentaforge.spectrum.registry import (
    STATUSES,
    LAYERS,
    ExistenceStatus,
    facts,
    catalog_values,
    pent5_no_olp_known,
)
from pentaforge.spectrum.planners import (
    JolpPlan,
    jolp_t_values,
    plan_jolp,
    m40_construction,
    m10_construction,
    td_construction_conditions,
    plan_construction53,
    replay_tables,
)
