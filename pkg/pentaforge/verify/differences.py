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
"""Differences of pairs in Z_q x Z_2 and the difference census of the PENT(3, 6m + 3) family"""

from collections import Counter
from itertools import combinations
from typing import (
    Iterable,
    List,
    NamedTuple,
    Sequence,
    Tuple,
)
from pentaforge.core._exceptions import (
    CensusError,
    DegenerateError,
    ParamError,
)

PartPoint = Tuple[int, int]


class Difference(NamedTuple):
    """Difference d_{i,j} with 0 <= d <= q/2; d = 0 always has type (0, 1)"""

    value: int
    type: Tuple[int, int]

    def __str__(self) -> str:
        """Return the difference as d_{i,j}

        Returns:
            str
        """
        return '{}_{{{},{}}}'.format(self.value, self.type[0], self.type[1])


def pair_difference(x: PartPoint, y: PartPoint, q: int) -> Difference:
    """Return the difference of the pair {x_i, y_j} of Z_q x Z_2.

    With the pair ordered so that x <= y, the difference is (y - x)_{j,i} when
    0 < y - x < q/2, (q - (y - x))_{i,j} when y - x > q/2, and 0_{0,1} when x = y.

    Args:
        x: point (x, i)
        y: point (y, j)
        q: odd modulus

    Returns:
        Difference

    Raises:
        DegenerateError: both arguments are the same point
        ParamError: q is even
    """
    if q % 2 == 0:
        raise ParamError('Differences need an odd modulus', q=q)
    (a, i), (c, j) = (x[0] % q, x[1]), (y[0] % q, y[1])
    if a == c:
        if i == j:
            raise DegenerateError('A point has no difference with itself', point=(a, i))
        return Difference(0, (0, 1))
    if a > c:
        (a, i), (c, j) = (c, j), (a, i)
    delta = c - a
    if 2 * delta < q:
        return Difference(delta, (j, i))
    return Difference(q - delta, (i, j))


def expected_differences(q: int) -> List[Difference]:
    """Return {0_{0,1}} and d_{i,j} for 1 <= d <= (q - 1)/2, i, j in {0, 1}

    Args:
        q: odd modulus

    Returns:
        List[Difference]
    """
    expected = [Difference(0, (0, 1))]
    for value in range(1, (q - 1) // 2 + 1):
        for i in (0, 1):
            for j in (0, 1):
                expected.append(Difference(value, (i, j)))
    return expected


def difference_census(base_blocks: Iterable[Sequence[PartPoint]],
                      opp_edges: Iterable[Sequence[PartPoint]],
                      q: int) -> Counter:
    """Count the differences generated by base blocks and deficiency edges.

    Under x_j -> (x + 1)_j the lines and deficiency edges form a PENT(3, 6m + 3) on
    Z_q x Z_2, q = 6m + 5, exactly when every difference of :func:`expected_differences`
    is generated once. Since q/2 lies between 3m + 2 and 3m + 3, the difference
    (3m + 3)_{1,1} is reported as (3m + 2)_{1,1}.

    Args:
        base_blocks: base blocks of points (x, part)
        opp_edges: generating edges of the deficiency graph
        q: modulus 6m + 5

    Returns:
        Counter: multiplicity of every Difference

    Raises:
        ParamError: q is not of the form 6m + 5
        CensusError: a difference is missing or generated more than once
    """
    if q % 6 != 5:
        raise ParamError('The census needs q = 6m + 5', q=q)
    census: Counter = Counter()
    for block in list(base_blocks) + list(opp_edges):
        for x, y in combinations(block, 2):
            census[pair_difference(x, y, q)] += 1
    expected = expected_differences(q)
    uncovered = [difference for difference in expected if census[difference] == 0]
    duplicated = [difference for difference, count in sorted(census.items()) if count > 1]
    if uncovered or duplicated:
        raise CensusError('Differences are not covered exactly once',
                          uncovered=uncovered, duplicated=duplicated)
    return census
