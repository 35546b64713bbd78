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
"""Verification gate applied to every construction output"""

import logging
from pentaforge.core._exceptions import ConstructionError
from pentaforge.core.design import (
    Design,
    Gdd,
)
from pentaforge.verify.gdd import (
    verify_gdd,
    verify_rgdd,
)
from pentaforge.verify.pent import (
    PentReport,
    verify_pent,
)

logger = logging.getLogger(__name__)


def checked_pent(design: Design, k: int, r: int, construction: str) -> PentReport:
    """Verify a constructed PENT(k, r)

    Args:
        design: constructed design
        k: block size
        r: replication number
        construction: name used in the error message

    Returns:
        PentReport

    Raises:
        ConstructionError: the design is not a PENT(k, r)
    """
    report = verify_pent(design, k, r)
    if not report.valid:
        raise ConstructionError('Construction did not produce a PENT(k, r)',
                                construction=construction, k=k, r=r,
                                problems='; '.join(report.violations))
    logger.info('%s: PENT(%d,%d) verified, %d opposite line pairs',
                construction, k, r, report.olp_count)
    return report


def checked_gdd(gdd: Gdd, construction: str) -> Gdd:
    """Verify a constructed GDD, including its resolution when present

    Args:
        gdd: constructed design
        construction: name used in the error message

    Returns:
        Gdd

    Raises:
        ConstructionError: the design is not a GDD of its type
    """
    if gdd.resolution is None:
        report = verify_gdd(gdd, gdd.k)
    else:
        report = verify_rgdd(gdd, gdd.k)
    if not report.valid:
        raise ConstructionError('Construction did not produce a valid GDD',
                                construction=construction, type=report.gdd_type,
                                problems='; '.join(report.violations))
    logger.info('%s: %d-GDD of type %s verified', construction, gdd.k, report.gdd_type)
    return gdd
