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
"""Command line front end of pentaforge.

The console script ``pentaforge`` runs :func:`main`. Exit codes are 0 for a valid result,
1 for usage errors, 2 for invalid designs and 3 for a missing ingredient design.

.. autosummary::
    :toctree: generated/

    main
    build_parser
    RunConfig

"""

from pentaforge.cli.config import (
    RunConfig,
)
from pentaforge.cli.commands import (
    EXIT_OK,
    EXIT_USAGE,
    EXIT_INVALID,
    EXIT_MISSING,
    load_source,
    verify_catalog_id,
    verify_design_file,
)
from pentaforge.cli.main import (
    build_parser,
    configure_logging,
    main,
)
