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
"""Weight sets: sums of q elements of a small set D"""

from functools import lru_cache
from typing import (
    Dict,
    Iterable,
    Optional,
    Set,
    Tuple,
)
from pentaforge.core._exceptions import (
    ParamError,
    ParameterRangeError,
)

M40_TAIL = (36, 34, 32, 30, 24, 22, 20, 12, 10, 0)


def weights40(g: int) -> Tuple[int, int, int]:
    """Return the weight set {g, 3g, 13g}

    Args:
        g: base weight

    Returns:
        Tuple[int, int, int]
    """
    return (g, 3 * g, 13 * g)


def weights10(g: int) -> Tuple[int, int, int]:
    """Return the weight set {g, 9g/5, 3g}

    Args:
        g: base weight, divisible by 5

    Returns:
        Tuple[int, int, int]
    """
    return (g, 9 * g // 5, 3 * g)


def m40_set(g: int, q: int) -> Set[int]:
    """Return {g j : j = q, q + 2, ..., 13q - 40} together with g(13q - j) for the tail j

    Every element is a sum of q elements of {g, 3g, 13g}.

    Args:
        g: even base weight other than 6 and 12
        q: number of weights, at least 40

    Returns:
        Set[int]

    Raises:
        ParameterRangeError: g odd, g in {6, 12} or q < 40
    """
    if g % 2 or g in (6, 12) or g < 2 or q < 40:
        raise ParameterRangeError('M40 needs even g not in {6, 12} and q >= 40', g=g, q=q)
    values = {g * j for j in range(q, 13 * q - 40 + 1, 2)}
    values.update(g * (13 * q - j) for j in M40_TAIL)
    return values


def m10_set(g: int, q: int) -> Set[int]:
    """Return {g j/5 : j = 5q, 5q + 2, ..., 15q} without j in {5q+2, 5q+6, 15q-14, 15q-8, 15q-4, 15q-2}

    Every element is a sum of q elements of {g, 9g/5, 3g}.

    Args:
        g: base weight divisible by 10, other than 30 and 60
        q: number of weights, at least 10

    Returns:
        Set[int]

    Raises:
        ParameterRangeError: 10 does not divide g, g in {30, 60} or q < 10
    """
    if g % 10 or g in (30, 60) or g < 10 or q < 10:
        raise ParameterRangeError('M10 needs 10 | g, g not in {30, 60} and q >= 10', g=g, q=q)
    excluded = {5 * q + 2, 5 * q + 6, 15 * q - 14, 15 * q - 8, 15 * q - 4, 15 * q - 2}
    return {g * j // 5 for j in range(5 * q, 15 * q + 1, 2) if j not in excluded}


def reachable_sums(weights: Iterable[int], q: int) -> Set[int]:
    """Return every sum of q elements of the weight set, repetition allowed

    Args:
        weights: weight set D
        q: number of summands

    Returns:
        Set[int]
    """
    values = sorted(set(weights))
    sums = {0}
    for _ in range(q):
        sums = {total + weight for total in sums for weight in values}
    return sums


def sum_decompose(m: int, weights: Iterable[int], q: int) -> Optional[Dict[int, int]]:
    """Write m as a sum of q elements of D, or return None

    The witness uses as many copies of the largest weight as possible, then of the next
    largest, and so on.

    Args:
        m: target sum
        weights: weight set D
        q: number of summands

    Returns:
        Optional[Dict[int, int]]: multiplicity of every weight
    """
    values = tuple(sorted(set(weights), reverse=True))
    if not values:
        return None if (m or q) else {}

    @lru_cache(maxsize=None)
    def solve(index: int, rest: int, count: int) -> Optional[Tuple[int, ...]]:
        remaining = values[index:]
        if rest < count * remaining[-1] or rest > count * remaining[0]:
            return None
        if len(remaining) == 1:
            return (count,) if rest == count * remaining[0] else None
        for used in range(min(count, rest // remaining[0]), -1, -1):
            tail = solve(index + 1, rest - used * remaining[0], count - used)
            if tail is not None:
                return (used,) + tail
        return None

    witness = solve(0, m, q)
    if witness is None:
        return None
    return dict(zip(values, witness))


def m_set_53(g: int, u: int, q: int) -> Set[int]:
    """Return {j d + (q - j) g : j = 0, ..., q} with d = g(u - 1)/3

    Args:
        g: base weight
        u: number of groups of the filler type g^u d^1
        q: number of weights

    Returns:
        Set[int]

    Raises:
        ParamError: g(u - 1) is not divisible by 3
    """
    if (g * (u - 1)) % 3:
        raise ParamError('g(u - 1) must be divisible by 3', g=g, u=u)
    d = g * (u - 1) // 3
    return {j * d + (q - j) * g for j in range(q + 1)}
