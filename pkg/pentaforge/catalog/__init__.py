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
"""Catalog of the explicitly given designs.

The 44 pentagonal geometries with block sizes 4 and 5 and the seven direct 5-GDDs are
stored as base blocks plus an automorphism in ``catalog/data``. Instantiation develops and
verifies them.

.. autosummary::
    :toctree: generated/

    Catalog
    CatalogEntry
    EntryVerification
    default_catalog
    list_entries
    get_entry
    instantiate
    verify_entry
    opp_prefix
    emit
    mutate

"""

from pentaforge.catalog.catalog import (
    DATA_DIR,
    Catalog,
    CatalogEntry,
    EntryVerification,
    parse_entry,
    default_catalog,
    list_entries,
    get_entry,
    instantiate,
    verify_entry,
    opp_prefix,
    emit,
    mutate,
)
