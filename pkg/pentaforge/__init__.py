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
"""Pentaforge

| Pentagonal geometries PENT(k, r) and group divisible designs.

pentaforge builds, verifies and catalogs pentagonal geometries: partial linear spaces with k
points on every line and r lines on every point in which the points not collinear with any
point x form a line, the opposite line of x.

.. autosummary::
    :toctree: generated/

    core
    autogen
    verify
    catalog
    construct
    spectrum
    cli

"""

from pentaforge.__version__ import __version__
from pentaforge import core
from pentaforge.core import (
    PentaforgeError,
    Design,
    Gdd,
    GddType,
    pent_params,
    parse_design,
    format_design,
    load_design,
    save_design,
)
from pentaforge import autogen
from pentaforge.autogen import (
    AutomorphismSpec,
    develop,
)
from pentaforge import verify
from pentaforge.verify import (
    verify_pent,
    verify_gdd,
)
from pentaforge import catalog
from pentaforge import construct
from pentaforge import spectrum
from pentaforge import cli
