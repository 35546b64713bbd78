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
"""Finite fields, transversal designs and resolvable designs from MOLS"""

import logging
from functools import lru_cache
from typing import (
    List,
    Tuple,
)
import galois
import numpy as np
from pentaforge.construct._verified import checked_gdd
from pentaforge.core._exceptions import (
    IngredientError,
    ParamError,
    ParameterRangeError,
)
from pentaforge.core.design import Gdd

logger = logging.getLogger(__name__)

MAX_ORDER = 2 ** 16


class FiniteField(object):
    """Arithmetic of GF(p^e) on the integer labels 0, ..., p^e - 1.

    Labels follow the integer representation of galois: the label of a polynomial is its
    coefficient vector read in base p. The modulus is the lexicographically smallest monic
    irreducible polynomial of degree e. Operation tables are built on first use.

    """

    def __init__(self, p: int, e: int = 1) -> None:
        """Initialize the field

        Args:
            p: characteristic
            e: degree of the extension

        Raises:
            ParamError: p is not prime or e < 1
            ParameterRangeError: p^e exceeds 2^16
        """
        if not galois.is_prime(p):
            raise ParamError('Field characteristic must be prime', p=p)
        if e < 1:
            raise ParamError('Field degree must be positive', e=e)
        if p ** e > MAX_ORDER:
            raise ParameterRangeError('Field order exceeds the supported maximum',
                                      order=p ** e, maximum=MAX_ORDER)
        self.p = p
        self.e = e
        self.order = p ** e
        if e == 1:
            self.field = galois.GF(p)
        else:
            self.field = galois.GF(self.order,
                                   irreducible_poly=galois.irreducible_poly(p, e, method='min'))
        self._add = None
        self._mul = None

    @property
    def irreducible_poly(self) -> galois.Poly:
        """Modulus polynomial of the extension

        Returns:
            galois.Poly
        """
        return self.field.irreducible_poly

    def elements(self) -> np.ndarray:
        """Return the labels 0, ..., q - 1

        Returns:
            np.ndarray
        """
        return np.arange(self.order, dtype=np.int64)

    def add_table(self) -> np.ndarray:
        """Return the q x q addition table on labels

        Returns:
            np.ndarray
        """
        if self._add is None:
            x = self.field.elements
            self._add = (x[:, None] + x[None, :]).view(np.ndarray).astype(np.int64)
        return self._add

    def mul_table(self) -> np.ndarray:
        """Return the q x q multiplication table on labels

        Returns:
            np.ndarray
        """
        if self._mul is None:
            x = self.field.elements
            self._mul = (x[:, None] * x[None, :]).view(np.ndarray).astype(np.int64)
        return self._mul

    def add(self, a: int, b: int) -> int:
        """Return a + b

        Args:
            a: label
            b: label

        Returns:
            int
        """
        return int(self.field(a) + self.field(b))

    def mul(self, a: int, b: int) -> int:
        """Return a * b

        Args:
            a: label
            b: label

        Returns:
            int
        """
        return int(self.field(a) * self.field(b))

    def inv(self, a: int) -> int:
        """Return the multiplicative inverse of a

        Args:
            a: non-zero label

        Returns:
            int

        Raises:
            ZeroDivisionError: a is zero
        """
        if a % self.order == 0:
            raise ZeroDivisionError('Zero has no inverse')
        return int(self.field(1) / self.field(a))

    def __str__(self) -> str:
        """Return string representation of the field

        Returns:
            str
        """
        return 'GF({}^{})'.format(self.p, self.e)

    __repr__ = __str__


@lru_cache(maxsize=None)
def gf(p: int, e: int = 1) -> FiniteField:
    """Return the field GF(p^e), cached

    Args:
        p: prime characteristic
        e: degree

    Returns:
        FiniteField
    """
    return FiniteField(p, e)


def prime_power(q: int) -> Tuple[int, int]:
    """Return (p, e) with q = p^e

    Args:
        q: prime power

    Returns:
        Tuple[int, int]

    Raises:
        ParamError: q is not a prime power
    """
    if q < 2:
        raise ParamError('Not a prime power', q=q)
    primes, exponents = galois.factors(q)
    if len(primes) != 1:
        raise ParamError('Not a prime power', q=q)
    return int(primes[0]), int(exponents[0])


def _standard_groups(k: int, n: int) -> List[List[int]]:
    return [list(range(i * n, (i + 1) * n)) for i in range(k)]


def td(k: int, q: int) -> Gdd:
    """Build a TD(k, q), a k-GDD of type q^k, over GF(q).

    The point (i, x) of group i is labelled i q + x. For k <= q the blocks are
    {(i, a + b i) : i < k}; for k = q + 1 every field element is a slope and the last group
    records the slope b. TD(k, 1) is a single block.

    Args:
        k: number of groups, at least 2
        q: prime power, or 1

    Returns:
        Gdd

    Raises:
        ParameterRangeError: k > q + 1 or k < 2
    """
    if k < 2:
        raise ParameterRangeError('Transversal designs need k >= 2', k=k)
    if q == 1:
        return Gdd(k, [list(range(k))], [[i] for i in range(k)], k)
    if k > q + 1:
        raise ParameterRangeError('TD(k, q) over a field needs k <= q + 1', k=k, q=q)
    field = gf(*prime_power(q))
    add, mul = field.add_table(), field.mul_table()
    slopes = min(k, q)
    a, b = np.meshgrid(np.arange(q), np.arange(q), indexing='ij')
    a, b = a.ravel(), b.ravel()
    columns = [i * q + add[a, mul[b, i]] for i in range(slopes)]
    if k == q + 1:
        columns.append(q * q + b)
    blocks = np.stack(columns, axis=1)
    return checked_gdd(Gdd(k * q, blocks.tolist(), _standard_groups(k, q), k),
                       'td({},{})'.format(k, q))


def rgdd_from_mols(k: int, q: int) -> Gdd:
    """Build a resolvable k-GDD of type q^k from a TD(k + 1, q) with one group removed

    The blocks {(i, a + b i) : i < k} with fixed slope b form the parallel class b.

    Args:
        k: number of groups, at most q
        q: prime power

    Returns:
        Gdd

    Raises:
        ParameterRangeError: k > q or k < 2
    """
    if k < 2 or k > q:
        raise ParameterRangeError('Resolvable TD(k, q) over a field needs 2 <= k <= q', k=k, q=q)
    field = gf(*prime_power(q))
    add, mul = field.add_table(), field.mul_table()
    blocks = []
    classes = []
    for b in range(q):
        classes.append(list(range(b * q, (b + 1) * q)))
        for a in range(q):
            blocks.append([i * q + int(add[a, mul[b, i]]) for i in range(k)])
    return checked_gdd(Gdd(k * q, blocks, _standard_groups(k, q), k, classes),
                       'rgdd_from_mols({},{})'.format(k, q))


def _is_td(gdd: Gdd) -> bool:
    parts = gdd.gdd_type.parts
    return len(parts) == 1 and parts[0][1] == gdd.k


def macneish(first: Gdd, second: Gdd) -> Gdd:
    """Return the direct product TD(k, mn) of a TD(k, m) and a TD(k, n)

    Point x of group i of the first design and point y of group i of the second become the
    point (i, x, y), labelled i m n + x n + y with x, y positions within the sorted groups.

    Args:
        first: TD(k, m)
        second: TD(k, n)

    Returns:
        Gdd

    Raises:
        ParamError: the block sizes differ or an argument is not a transversal design
    """
    if first.k != second.k:
        raise ParamError('MacNeish products need equal k', k1=first.k, k2=second.k)
    if not _is_td(first) or not _is_td(second):
        raise ParamError('MacNeish products need transversal designs')
    k = first.k
    m, n = first.gdd_type.parts[0][0], second.gdd_type.parts[0][0]

    def coordinates(design: Gdd) -> np.ndarray:
        # column i holds the position within group i of each block's point in group i
        group_of = design.group_of_points()
        position = np.empty(design.v, dtype=np.int64)
        for group in design.groups:
            position[list(group)] = np.arange(len(group))
        result = np.empty((design.b, k), dtype=np.int64)
        for row, block in enumerate(design):
            result[row, group_of[list(block)]] = position[list(block)]
        return result

    x, y = coordinates(first), coordinates(second)
    offsets = np.arange(k, dtype=np.int64) * m * n
    blocks = (offsets[None, None, :] + x[:, None, :] * n + y[None, :, :]).reshape(-1, k)
    return checked_gdd(Gdd(k * m * n, blocks.tolist(), _standard_groups(k, m * n), k),
                       'macneish(TD({},{}), TD({},{}))'.format(k, m, k, n))


def transversal_design(k: int, n: int) -> Gdd:
    """Build a TD(k, n) as a MacNeish product over the prime power factors of n

    Args:
        k: number of groups
        n: group size

    Returns:
        Gdd

    Raises:
        IngredientError: some prime power factor q of n has q + 1 < k
    """
    if n == 1:
        return td(k, 1)
    primes, exponents = galois.factors(n)
    factors = [int(p) ** int(e) for p, e in zip(primes, exponents)]
    if any(k > q + 1 for q in factors):
        raise IngredientError('No field construction for the transversal design',
                              missing='TD({},{})'.format(k, n))
    result = td(k, factors[0])
    for q in factors[1:]:
        result = macneish(result, td(k, q))
    return result
