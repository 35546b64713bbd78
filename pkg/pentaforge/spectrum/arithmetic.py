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
"""Admissibility and replication arithmetic for the existence spectrum"""

from typing import (
    List,
    NamedTuple,
    Tuple,
)
from pentaforge.core._exceptions import (
    ParamError,
    ParameterRangeError,
)
from pentaforge.core.params import (
    is_admissible,
    theorem22_params,
)


def admissible(k: int, r: int) -> bool:
    """Return True when r(r - 1) is divisible by k

    Args:
        k: block size, at least 2
        r: replication number

    Returns:
        bool

    Raises:
        ParameterRangeError: k < 2
    """
    if k < 2:
        raise ParameterRangeError('Block size must be at least 2', k=k)
    return is_admissible(k, r)


def admissible_residues(k: int) -> List[int]:
    """Return the residues r mod k for which r is admissible

    Args:
        k: block size, at least 2

    Returns:
        List[int]
    """
    return [rho for rho in range(k) if admissible(k, rho)]


class Pent5Family(NamedTuple):
    """Arithmetic family step*t + offset of PENT(5, r) replication numbers.

    The family holds for t >= t_min, apart from the values of t in ``excluded_t``.
    """

    part: str
    base: int
    step: int
    offset: int
    t_min: int = 0
    excluded_t: Tuple[int, ...] = ()

    def __str__(self) -> str:
        """Return string representation of the family

        Returns:
            str
        """
        text = '{}t + {}, t >= {}'.format(self.step, self.offset, self.t_min)
        if self.excluded_t:
            text += ', t not in {}'.format(set(self.excluded_t))
        return text

    def value(self, t: int) -> int:
        """Return the member for parameter t

        Args:
            t: family parameter

        Returns:
            int
        """
        return self.step * t + self.offset

    def contains(self, r: int) -> bool:
        """Return True when r is a member of the family

        Args:
            r: replication number

        Returns:
            bool
        """
        if r < self.offset or (r - self.offset) % self.step:
            return False
        t = (r - self.offset) // self.step
        return t >= self.t_min and t not in self.excluded_t

    def values(self, limit: int) -> List[int]:
        """Return the members up to and including limit

        Args:
            limit: largest value returned

        Returns:
            List[int]
        """
        members = []
        t = self.t_min
        while self.value(t) <= limit:
            if t not in self.excluded_t:
                members.append(self.value(t))
            t += 1
        return members


def pent5_families(r: int) -> List[Pent5Family]:
    """Families of PENT(5, r') obtained recursively from one PENT(5, r), r >= 20

    For r = 0 mod 5 the families are (10r + 15)t + r and (10r + 15)t + 5r + 6, the second one
    possibly failing at t = 1 when r <= 1220 and r is not divisible by 3. For r = 1 mod 5 the
    family is (2r + 3)t + r for t >= 2.

    Args:
        r: replication number of the starting PENT(5, r)

    Returns:
        List[Pent5Family]

    Raises:
        ParameterRangeError: r < 20
        ParamError: r is not admissible for block size 5
    """
    if r < 20:
        raise ParameterRangeError('The recursive families need r >= 20', r=r)
    if r % 5 == 0:
        step = 10 * r + 15
        guarded = (1,) if r <= 1220 and r % 3 else ()
        return [Pent5Family('i', r, step, r),
                Pent5Family('ii', r, step, 5 * r + 6, excluded_t=guarded)]
    if r % 5 == 1:
        return [Pent5Family('iii', r, 2 * r + 3, r, t_min=2)]
    raise ParamError('r must be 0 or 1 mod 5', r=r)
