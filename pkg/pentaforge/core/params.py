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
"""Parameter arithmetic of pentagonal geometries"""

from typing import NamedTuple
from pentaforge.core._exceptions import (
    AdmissibilityError,
    ParamError,
    ParameterRangeError,
)


class PentParams(NamedTuple):
    """Parameters of a pentagonal geometry PENT(k, r).

    A PENT(k, r) has v = r(k - 1) + k + 1 points and b = v r / k lines.
    """

    k: int
    r: int
    v: int
    b: int

    def __str__(self) -> str:
        """Return string representation of the parameters

        Returns:
            str
        """
        return 'PENT({},{}) v={} b={}'.format(self.k, self.r, self.v, self.b)


def point_count(k: int, r: int) -> int:
    """Return the number of points r(k - 1) + k + 1 of a PENT(k, r)

    Args:
        k: block size
        r: replication number

    Returns:
        int
    """
    return r * (k - 1) + k + 1


def is_admissible(k: int, r: int) -> bool:
    """Return True when r(r - 1) is divisible by k

    Args:
        k: block size
        r: replication number

    Returns:
        bool
    """
    return (r * (r - 1)) % k == 0


def pent_params(k: int, r: int) -> PentParams:
    """Compute point and line counts of a PENT(k, r)

    Args:
        k: block size, at least 2
        r: replication number, at least 1

    Returns:
        PentParams

    Raises:
        TypeError: k and r must be integers
        ParameterRangeError: k < 2 or r < 1
        AdmissibilityError: the line count v r / k is not an integer
    """
    if not isinstance(k, int) or not isinstance(r, int):
        raise TypeError('k and r must be integers')
    if k < 2 or r < 1:
        raise ParameterRangeError('PENT(k, r) needs k >= 2 and r >= 1', k=k, r=r)
    v = point_count(k, r)
    if (v * r) % k != 0:
        raise AdmissibilityError('v*r is not divisible by k, r(r - 1) is not 0 mod k',
                                 k=k, r=r, v=v)
    return PentParams(k=k, r=r, v=v, b=(v * r) // k)


def theorem22_params(n: int, r_total: int, k: int) -> int:
    """Return R + (N - 1)(k + 1)/(k - 1), the replication number of an overlay

    Overlaying every group of a k-GDD with N groups by a PENT(k, r_i) gives a PENT(k, r)
    with this r, where R is the sum of the r_i.

    Args:
        n: number of groups N
        r_total: sum R of the filler replication numbers
        k: block size

    Returns:
        int

    Raises:
        ParamError: (N - 1)(k + 1) is not divisible by k - 1
    """
    if ((n - 1) * (k + 1)) % (k - 1) != 0:
        raise ParamError('(N - 1)(k + 1)/(k - 1) is not an integer', n=n, k=k)
    return r_total + (n - 1) * (k + 1) // (k - 1)
