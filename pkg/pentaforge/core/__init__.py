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
"""Incidence structures, parameter arithmetic and group types.

Every design in pentaforge lives on the dense point set 0, ..., v - 1. Structured point sets
are flattened by the construction that builds them.

.. autosummary::
    :toctree: generated/

    Design
    Gdd
    GddType
    PentParams
    pent_params
    point_count
    is_admissible
    theorem22_params
    parse_gdd_type
    format_gdd_type
    type_of_groups
    DesignFile
    parse_design
    format_design
    load_design
    save_design

"""

from pentaforge.core._exceptions import (
    PentaforgeError,
    AdmissibilityError,
    ParseError,
    PartitionError,
    SpecError,
    ParamError,
    DegenerateError,
    CensusError,
    CatalogNotFoundError,
    DataCorruptionError,
    IngredientError,
    ParameterRangeError,
    ResolutionError,
    RecipeError,
    ConstructionError,
)
from pentaforge.core.params import (
    PentParams,
    pent_params,
    point_count,
    is_admissible,
    theorem22_params,
)
from pentaforge.core.gdd_type import (
    GddType,
    parse_gdd_type,
    format_gdd_type,
    type_of_groups,
)
from pentaforge.core.design import (
    Block,
    Design,
    Gdd,
    normalize_block,
)
from pentaforge.core.design_io import (
    DesignFile,
    parse_design,
    format_design,
    load_design,
    save_design,
)
