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
"""Constructions of pentagonal geometries and group divisible designs.

Every function that returns a design verifies it first (``verify=True``) and raises
:class:`~pentaforge.core.ConstructionError` when the check fails. Ingredient designs whose
existence rests on the literature are passed in by the caller.

.. autosummary::
    :toctree: generated/

    langford_pairs
    skew_triples
    pent3_base_blocks
    pent3_deficiency_edges
    pent3_automorphism
    pent3_direct
    degenerate_pent
    wfc_overlay
    inflate
    rgdd_to_gdd
    td_patch_gdd
    gf
    FiniteField
    td
    rgdd_from_mols
    macneish
    transversal_design
    m40_set
    m10_set
    reachable_sums
    sum_decompose
    m_set_53

"""

from pentaforge.construct.langford import (
    LangfordPair,
    SkewTriple,
    pairing_domain,
    triple_target,
    langford_pairs,
    skew_triples,
)
from pentaforge.construct.pent3 import (
    flatten,
    pent3_base_blocks,
    pent3_deficiency_edges,
    pent3_automorphism,
    pent3_direct,
)
from pentaforge.construct.overlay import (
    degenerate_pent,
    filler_replication,
    wfc_overlay,
)
from pentaforge.construct.fields import (
    FiniteField,
    gf,
    prime_power,
    td,
    rgdd_from_mols,
    macneish,
    transversal_design,
)
from pentaforge.construct.gdd_ops import (
    inflate,
    rgdd_to_gdd,
    td_patch_gdd,
)
from pentaforge.construct.msets import (
    weights40,
    weights10,
    m40_set,
    m10_set,
    reachable_sums,
    sum_decompose,
    m_set_53,
)
