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
"""Langford type pairings and the skew triples of the PENT(3, 6m + 3) family"""

from typing import (
    List,
    NamedTuple,
    Set,
)
from pentaforge.core._exceptions import ParameterRangeError

_SMALL = {
    5: [(1, 8), (4, 10), (2, 7), (5, 9), (3, 6)],
    6: [(6, 9), (1, 5), (3, 8), (7, 13), (4, 11), (2, 10)],
}


class LangfordPair(NamedTuple):
    """Pair (a, b) with a < b"""

    a: int
    b: int


class SkewTriple(NamedTuple):
    """Triple (0, x, z) with 0 < x < z"""

    zero: int
    x: int
    z: int


def pairing_domain(m: int) -> Set[int]:
    """Return {1, ..., 2m}, or {1, ..., 2m - 1, 2m + 1} when m is 2 or 3 mod 4

    Args:
        m: number of pairs

    Returns:
        Set[int]
    """
    if m % 4 in (0, 1):
        return set(range(1, 2 * m + 1))
    return set(range(1, 2 * m)) | {2 * m + 1}


def triple_target(m: int) -> Set[int]:
    """Return {3, ..., 3m + 2}, or {3, ..., 3m + 1, 3m + 3} when m is 2 or 3 mod 4

    Args:
        m: number of triples

    Returns:
        Set[int]
    """
    if m % 4 in (0, 1):
        return set(range(3, 3 * m + 3))
    return set(range(3, 3 * m + 2)) | {3 * m + 3}


def _pairs_0(t: int) -> List[tuple]:
    pairs = [(2 * t - j - 2, 2 * t + j + 2) for j in range(t - 2)]
    pairs += [(t - j, 3 * t + j + 1) for j in range(t)]
    pairs += [(6 * t - j - 1, 6 * t + j + 2) for j in range(t - 1)]
    pairs += [(5 * t - j, 7 * t + j + 2) for j in range(t - 1)]
    pairs += [(2 * t + 1, 4 * t + 1), (3 * t, 7 * t + 1), (2 * t - 1, 6 * t + 1), (2 * t, 6 * t)]
    return pairs


def _pairs_1(t: int) -> List[tuple]:
    pairs = [(j, 4 * t - j + 2) for j in range(1, t + 1)]
    pairs += [(j + t + 1, 3 * t - j + 2) for j in range(1, t)]
    pairs += [(j + 4 * t + 2, 8 * t - j + 3) for j in range(1, t + 1)]
    pairs += [(j + 5 * t + 3, 7 * t - j + 3) for j in range(1, t - 1)]
    pairs += [(2 * t + 1, 6 * t + 4), (2 * t + 2, 6 * t + 3), (4 * t + 2, 6 * t + 2),
              (t + 1, 5 * t + 3)]
    return pairs


def _pairs_2(t: int) -> List[tuple]:
    # m = 4t + 10
    pairs = [(2 * t - j + 1, 2 * t + j + 5) for j in range(t + 1)]
    pairs += [(t - j, 3 * t + j + 7) for j in range(t)]
    pairs += [(6 * t - j + 10, 6 * t + j + 15) for j in range(t)]
    pairs += [(5 * t - j + 10, 7 * t + j + 16) for j in range(t + 1)]
    pairs += [(3 * t + 6, 7 * t + 15), (4 * t + 7, 8 * t + 19), (2 * t + 4, 6 * t + 11),
              (4 * t + 9, 8 * t + 17), (4 * t + 8, 6 * t + 13), (2 * t + 2, 6 * t + 12),
              (2 * t + 3, 6 * t + 14), (8 * t + 18, 8 * t + 21)]
    return pairs


def _pairs_3(t: int) -> List[tuple]:
    # m = 4t + 7
    pairs = [(2 * t - j + 1, j + 2 * t + 4) for j in range(t + 1)]
    pairs += [(t - j, j + 3 * t + 6) for j in range(t)]
    pairs += [(6 * t - j + 8, j + 6 * t + 12) for j in range(t)]
    pairs += [(5 * t - j + 8, j + 7 * t + 13) for j in range(t + 1)]
    pairs += [(3 * t + 5, 7 * t + 12), (4 * t + 6, 8 * t + 15), (2 * t + 3, 6 * t + 9),
              (4 * t + 7, 6 * t + 11), (2 * t + 2, 6 * t + 10)]
    return pairs


def langford_pairs(m: int) -> List[LangfordPair]:
    """Partition the pairing domain into m pairs with differences {3, ..., m + 2}

    m = 5 and m = 6 are listed explicitly; every other m uses the closed formulas for
    m = 4t (m >= 8), 4t + 1 (m >= 9), 4t + 10 (m >= 10) and 4t + 7 (m >= 7).

    Args:
        m: number of pairs, at least 5

    Returns:
        List[LangfordPair]

    Raises:
        ParameterRangeError: m < 5
    """
    if m < 5:
        raise ParameterRangeError('Langford pairings are given for m >= 5', m=m)
    if m in _SMALL:
        pairs = _SMALL[m]
    elif m % 4 == 0:
        pairs = _pairs_0(m // 4)
    elif m % 4 == 1:
        pairs = _pairs_1((m - 1) // 4)
    elif m % 4 == 2:
        pairs = _pairs_2((m - 10) // 4)
    else:
        pairs = _pairs_3((m - 7) // 4)
    return [LangfordPair(a, b) for a, b in pairs]


def skew_triples(m: int) -> List[SkewTriple]:
    """Return T = {(0, b - a, b + m + 2) : (a, b) in langford_pairs(m)}

    The union of {x, z - x, z} over T is :func:`triple_target` (m).

    Args:
        m: number of triples, at least 5

    Returns:
        List[SkewTriple]
    """
    return [SkewTriple(0, pair.b - pair.a, pair.b + m + 2) for pair in langford_pairs(m)]
