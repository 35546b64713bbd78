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
"""Verifiers for partial linear spaces, pentagonal geometries and group divisible designs.

Verifiers never raise on a failed axiom. They return reports that collect every violation,
so a corrupted design shows all of its defects at once.

.. autosummary::
    :toctree: generated/

    verify_pls
    verify_pent
    verify_gdd
    verify_resolution
    verify_rgdd
    deficiency_graph
    girth
    classify_components
    opposite_line_map
    opposite_line_pairs
    compare_claims
    pair_difference
    difference_census
    PentReport
    GddReport
    DeficiencyReport
    Difference

"""

from pentaforge.verify.pairs import (
    pair_counts,
    collinearity,
    verify_pls,
    repeated_blocks,
)
from pentaforge.verify.graphs import (
    Component,
    DeficiencyReport,
    deficiency_graph,
    girth,
    classify_components,
    is_complete_bipartite,
)
from pentaforge.verify.pent import (
    PentReport,
    verify_pent,
    opposite_line_map,
    opposite_line_pairs,
    compare_claims,
)
from pentaforge.verify.gdd import (
    GddReport,
    verify_gdd,
    verify_resolution,
    verify_rgdd,
)
from pentaforge.verify.differences import (
    Difference,
    pair_difference,
    expected_differences,
    difference_census,
)
