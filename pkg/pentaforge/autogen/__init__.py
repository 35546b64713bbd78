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
"""Orbit development of base blocks.

Catalog designs are given by base blocks and a translation type map acting on consecutive
segments of the point set; development applies all J maps to every base block.

.. autosummary::
    :toctree: generated/

    SegmentSpec
    AutomorphismSpec
    apply
    develop
    check_bijection

"""

from pentaforge.autogen.automorphism import (
    SegmentSpec,
    AutomorphismSpec,
    apply,
    develop,
    check_bijection,
)
