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
"""Piecewise modular point maps and development of base blocks"""

import bisect
import logging
import re
from functools import reduce
from math import gcd
from typing import (
    Iterable,
    List,
    NamedTuple,
    Optional,
    Sequence,
)
import numpy as np
from hqsbase.qonfig import Qonfig
from pentaforge.core._exceptions import (
    ParseError,
    SpecError,
)
from pentaforge.core.design import Block

logger = logging.getLogger(__name__)

_SPEC = re.compile(r'^(?:AUT\s+)?seg=([0-9,;]+)\s+J=([0-9]+)$')


class SegmentSpec(NamedTuple):
    """One clause x -> offset + ((x - offset) + multiplier * j mod modulus)"""

    offset: int
    modulus: int
    multiplier: int

    def __str__(self) -> str:
        """Return the clause in catalog notation

        Returns:
            str
        """
        return '{},{},{}'.format(self.offset, self.modulus, self.multiplier)


class AutomorphismSpec(object):
    """Translation type map acting on consecutive segments of the point set.

    Segment i moves the points offset_i, ..., offset_i + modulus_i - 1 cyclically by
    multiplier_i * j for the orbit index j = 0, ..., J - 1. The orbit count J is stored, not
    inferred; :meth:`natural_orbit_count` only cross-checks it.

    """

    _qonfig_defaults_dict = {
        'segments': {'doc': 'List of [offset, modulus, multiplier] triples',
                     'default': None},
        'orbit_count': {'doc': 'Number of images J of every base block',
                        'default': 1},
    }
    _qonfig_never_receives_values = True

    def __init__(self,
                 segments: Iterable[Sequence[int]],
                 orbit_count: int) -> None:
        """Initialize the automorphism specification

        Args:
            segments: (offset, modulus, multiplier) triples in increasing offset
            orbit_count: number of orbit indices J

        Raises:
            SpecError: modulus < 1, multiplier < 0, J < 1, or the map does not return to the
                       identity at j = J
        """
        self._segments = [SegmentSpec(*(int(value) for value in segment))
                          for segment in segments]
        self._orbit_count = int(orbit_count)
        if not self._segments:
            raise SpecError('Automorphism needs at least one segment')
        if self._orbit_count < 1:
            raise SpecError('Orbit count must be positive', J=self._orbit_count)
        for segment in self._segments:
            if segment.modulus < 1 or segment.multiplier < 0:
                raise SpecError('Segments need modulus >= 1 and multiplier >= 0',
                                segment=str(segment))
            if (segment.multiplier * self._orbit_count) % segment.modulus != 0:
                raise SpecError('Segment does not return to the identity after J steps',
                                segment=str(segment), J=self._orbit_count)
        self._offsets = [segment.offset for segment in self._segments]

    @classmethod
    def from_qonfig(cls,
                    config: Qonfig['AutomorphismSpec']
                    ) -> 'AutomorphismSpec':
        """Create an Instance from Qonfig

        Args:
            config: Qonfig of class

        Returns:
            AutomorphismSpec
        """
        return cls(segments=config['segments'], orbit_count=config['orbit_count'])

    def to_qonfig(self) -> 'Qonfig[AutomorphismSpec]':
        """Create a Qonfig from Instance

        Returns:
            Qonfig[AutomorphismSpec]
        """
        config = Qonfig(self.__class__)
        config['segments'] = [list(segment) for segment in self._segments]
        config['orbit_count'] = self._orbit_count
        return config

    @classmethod
    def parse(cls, text: str) -> 'AutomorphismSpec':
        """Parse 'seg=<offset>,<modulus>,<multiplier>[;...] J=<J>', optionally prefixed by AUT

        Args:
            text: specification string

        Returns:
            AutomorphismSpec

        Raises:
            ParseError: malformed specification
        """
        match = _SPEC.match(text.strip())
        if match is None:
            raise ParseError('Malformed automorphism specification', text=text)
        segments = []
        for clause in match.group(1).split(';'):
            values = clause.split(',')
            if len(values) != 3 or not all(values):
                raise ParseError('Segments need offset, modulus and multiplier', clause=clause)
            segments.append([int(value) for value in values])
        return cls(segments, int(match.group(2)))

    def format(self) -> str:
        """Return the specification in catalog notation

        Returns:
            str
        """
        return 'seg={} J={}'.format(';'.join(str(segment) for segment in self._segments),
                                    self._orbit_count)

    @property
    def segments(self) -> List[SegmentSpec]:
        """Segments in increasing offset

        Returns:
            List[SegmentSpec]
        """
        return list(self._segments)

    @property
    def orbit_count(self) -> int:
        """Orbit count J

        Returns:
            int
        """
        return self._orbit_count

    @property
    def v(self) -> int:
        """End of the last segment, the size of the point set acted on

        Returns:
            int
        """
        last = self._segments[-1]
        return last.offset + last.modulus

    def validate(self, v: Optional[int] = None) -> None:
        """Check that the segments tile [0, v) in order without gaps or overlaps

        Args:
            v: number of points, defaults to the end of the last segment

        Raises:
            SpecError: the segments do not tile the point set
        """
        position = 0
        for segment in self._segments:
            if segment.offset != position:
                raise SpecError('Segments do not tile the point set',
                                segment=str(segment), expected_offset=position)
            position += segment.modulus
        if v is not None and position != v:
            raise SpecError('Segments cover a different number of points', covered=position, v=v)

    def natural_orbit_count(self) -> int:
        """Return the least J' > 0 for which every segment returns to the identity

        Returns:
            int
        """
        orders = [segment.modulus // gcd(segment.modulus, segment.multiplier)
                  for segment in self._segments]
        return reduce(lambda a, b: a * b // gcd(a, b), orders, 1)

    def _segment_of(self, p: int) -> SegmentSpec:
        index = bisect.bisect_right(self._offsets, p) - 1
        if index < 0:
            raise SpecError('Point lies in no segment', point=p)
        segment = self._segments[index]
        if p >= segment.offset + segment.modulus:
            raise SpecError('Point lies in no segment', point=p)
        return segment

    def apply(self, j: int, p: int) -> int:
        """Return the image of point p under the j-th map

        Args:
            j: orbit index, 0 <= j < J
            p: point label

        Returns:
            int

        Raises:
            SpecError: j out of range or p outside every segment
        """
        if j < 0 or j >= self._orbit_count:
            raise SpecError('Orbit index out of range', j=j, J=self._orbit_count)
        segment = self._segment_of(p)
        return segment.offset + (p - segment.offset + segment.multiplier * j) % segment.modulus

    def image_table(self, j: int) -> np.ndarray:
        """Return the images of all points 0..v-1 under the j-th map

        Args:
            j: orbit index

        Returns:
            np.ndarray
        """
        table = np.empty(self.v, dtype=np.int64)
        for segment in self._segments:
            local = np.arange(segment.modulus, dtype=np.int64)
            table[segment.offset:segment.offset + segment.modulus] = (
                segment.offset + (local + segment.multiplier * j) % segment.modulus)
        return table

    def __eq__(self, other: object) -> bool:
        """Compare segments and orbit count

        Args:
            other: object compared to

        Returns:
            bool
        """
        if not isinstance(other, AutomorphismSpec):
            return False
        return (self._segments == other._segments
                and self._orbit_count == other._orbit_count)

    def __str__(self) -> str:
        """Return the specification in catalog notation

        Returns:
            str
        """
        return self.format()

    def __repr__(self) -> str:
        """Return representation

        Returns:
            str
        """
        return "AutomorphismSpec.parse('{}')".format(self.format())


def apply(spec: AutomorphismSpec, j: int, p: int) -> int:
    """Return the image of p under the j-th map of spec

    Args:
        spec: automorphism specification
        j: orbit index
        p: point label

    Returns:
        int
    """
    return spec.apply(j, p)


def develop(base_blocks: Iterable[Iterable[int]], spec: AutomorphismSpec) -> List[Block]:
    """Develop base blocks into all J images, base block major and orbit index minor

    Repeated images are kept.

    Args:
        base_blocks: base blocks as iterables of point labels
        spec: automorphism acting on the points

    Returns:
        List[Block]

    Raises:
        SpecError: segments do not tile or a base block point lies outside every segment
    """
    spec.validate()
    base = [[int(point) for point in block] for block in base_blocks]
    v = spec.v
    for block in base:
        for point in block:
            if point < 0 or point >= v:
                raise SpecError('Point lies in no segment', point=point)
    tables = [spec.image_table(j) for j in range(spec.orbit_count)]
    developed = []
    for block in base:
        for table in tables:
            developed.append(tuple(sorted(int(point) for point in table[block])))
    logger.debug('Developed %d base blocks into %d blocks', len(base), len(developed))
    return developed


def check_bijection(spec: AutomorphismSpec, v: Optional[int] = None) -> bool:
    """Test exhaustively that every map j = 0..J-1 permutes [0, v)

    Args:
        spec: automorphism specification
        v: number of points, defaults to spec.v

    Returns:
        bool
    """
    try:
        spec.validate(v)
    except SpecError:
        return False
    v = spec.v
    for j in range(spec.orbit_count):
        table = spec.image_table(j)
        if not np.array_equal(np.sort(table), np.arange(v)):
            return False
    return True
