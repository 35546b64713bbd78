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
"""Group types of group divisible designs in exponent notation"""

import re
from collections import Counter
from typing import (
    Dict,
    Iterable,
    Iterator,
    Optional,
    Sequence,
    Tuple,
    Union,
)
from pentaforge.core._exceptions import (
    ParseError,
    PartitionError,
)

_TOKEN = re.compile(r'^([0-9]+)(?:\^([0-9]+))?$')


class GddType(object):
    """Normalized multiset of group sizes, written as g_1^u_1 g_2^u_2 ...

    Sizes are strictly increasing and every count is at least one.
    ``GddType({2: 40, 6: 1})`` and ``parse_gdd_type('2^40 6^1')`` are equal.

    """

    def __init__(self,
                 parts: Union[Dict[int, int], Iterable[Tuple[int, int]]]) -> None:
        """Initialize the group type

        Args:
            parts: mapping or pairs of group size to number of groups of that size;
                   repeated sizes are merged

        Raises:
            ParseError: sizes and counts must be positive
        """
        pairs = parts.items() if isinstance(parts, dict) else parts
        merged: Counter = Counter()
        for size, count in pairs:
            if size < 1 or count < 1:
                raise ParseError('Group sizes and counts must be positive',
                                 size=size, count=count)
            merged[int(size)] += int(count)
        self._parts: Tuple[Tuple[int, int], ...] = tuple(sorted(merged.items()))

    @property
    def parts(self) -> Tuple[Tuple[int, int], ...]:
        """Return the (size, count) pairs in increasing size

        Returns:
            Tuple[Tuple[int, int], ...]
        """
        return self._parts

    @property
    def points(self) -> int:
        """Return the number of points sum(size * count)

        Returns:
            int
        """
        return sum(size * count for size, count in self._parts)

    @property
    def group_count(self) -> int:
        """Return the number of groups

        Returns:
            int
        """
        return sum(count for _, count in self._parts)

    def sizes(self) -> Iterator[int]:
        """Yield every group size with multiplicity, increasing

        Yields:
            int
        """
        for size, count in self._parts:
            for _ in range(count):
                yield size

    def scaled(self, h: int) -> 'GddType':
        """Return the type with every group size multiplied by h

        Args:
            h: inflation factor

        Returns:
            GddType
        """
        return GddType([(size * h, count) for size, count in self._parts])

    def __eq__(self, other: object) -> bool:
        """Compare with other Python object

        Args:
            other: object compared to

        Returns:
            bool
        """
        if isinstance(other, str):
            other = parse_gdd_type(other)
        if not isinstance(other, GddType):
            return False
        return self._parts == other._parts

    def __hash__(self) -> int:
        """Hash of the normalized parts

        Returns:
            int
        """
        return hash(self._parts)

    def __str__(self) -> str:
        """Return exponent notation

        Returns:
            str
        """
        return format_gdd_type(self)

    def __repr__(self) -> str:
        """Return representation

        Returns:
            str
        """
        return "GddType('{}')".format(format_gdd_type(self))


def parse_gdd_type(text: str) -> GddType:
    """Parse exponent notation such as '44^3 401^1' or a bare '7'

    Args:
        text: whitespace separated tokens g^u or g

    Returns:
        GddType

    Raises:
        ParseError: a token is malformed or the text is empty
    """
    tokens = text.split()
    if not tokens:
        raise ParseError('Empty group type')
    parts = []
    for token in tokens:
        match = _TOKEN.match(token)
        if match is None:
            raise ParseError('Malformed group type token', token=token)
        size = int(match.group(1))
        count = int(match.group(2)) if match.group(2) is not None else 1
        parts.append((size, count))
    return GddType(parts)


def format_gdd_type(gdd_type: GddType) -> str:
    """Format a group type in exponent notation

    Args:
        gdd_type: normalized group type

    Returns:
        str
    """
    return ' '.join('{}^{}'.format(size, count) for size, count in gdd_type.parts)


def type_of_groups(groups: Sequence[Iterable[int]], v: Optional[int] = None) -> GddType:
    """Collect the group sizes of a partition of [0, v) into a GddType

    Args:
        groups: partition of the points into groups
        v: number of points, defaults to the total size of the groups

    Returns:
        GddType

    Raises:
        PartitionError: groups are empty, overlap, leave points uncovered or use labels >= v
    """
    groups = [list(group) for group in groups]
    total = sum(len(group) for group in groups)
    if v is None:
        v = total
    seen = [False] * v
    for index, group in enumerate(groups):
        if not group:
            raise PartitionError('Empty group', group=index)
        for point in group:
            if point < 0 or point >= v:
                raise PartitionError('Point outside [0, v)', point=point, v=v)
            if seen[point]:
                raise PartitionError('Point occurs in more than one group', point=point)
            seen[point] = True
    if total != v:
        missing = [point for point, flag in enumerate(seen) if not flag]
        raise PartitionError('Groups do not cover all points', missing=missing[:10])
    return GddType(Counter(len(group) for group in groups))
