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
"""Incidence structures on the dense point set [0, v)"""

import numpy as np
from typing import (
    Dict,
    Iterable,
    Iterator,
    List,
    Optional,
    Sequence,
    Tuple,
    Union,
)
from hqsbase.qonfig import Qonfig
from pentaforge.core._exceptions import (
    ParamError,
    PartitionError,
)
from pentaforge.core.gdd_type import (
    GddType,
    type_of_groups,
)

Block = Tuple[int, ...]


def normalize_block(points: Iterable[int], v: int) -> Block:
    """Return the block as a sorted tuple after checking its labels

    Args:
        points: point labels of the block
        v: number of points of the enclosing design

    Returns:
        Block

    Raises:
        ParamError: label outside [0, v), repeated label or fewer than two points
    """
    block = tuple(sorted(int(point) for point in points))
    if len(block) < 2:
        raise ParamError('Blocks need at least two points', block=block)
    if block[0] < 0 or block[-1] >= v:
        raise ParamError('Block label outside [0, v)', block=block, v=v)
    for left, right in zip(block, block[1:]):
        if left == right:
            raise ParamError('Repeated point in block', block=block)
    return block


class Design(object):
    """A point count v and a list of blocks over the points 0, ..., v - 1.

    Blocks are stored as sorted tuples in the order they were given. Repeated blocks are kept;
    the verifiers report them. Two designs compare equal when they have the same v and the
    same sorted multiset of blocks.

    The following properties are defined:
        - to_/from_qonfig: designs can be serialised with the HQS Qonfig package
        - relabel: apply a point permutation or an injective map into a larger point set
        - canonical: sorted multiset of blocks used for equality
        - point_degrees: number of blocks through every point

    """

    _qonfig_defaults_dict = {
        'v': {'doc': 'Number of points',
              'default': 0},
        'blocks': {'doc': 'List of blocks, each a list of point labels',
                   'default': None},
    }
    _qonfig_never_receives_values = True

    def __init__(self,
                 v: int,
                 blocks: Optional[Iterable[Iterable[int]]] = None) -> None:
        """Initialize the design

        Args:
            v: number of points
            blocks: blocks given as iterables of point labels

        Raises:
            TypeError: v must be an integer
            ParamError: v is negative or a block is malformed
        """
        if not isinstance(v, (int, np.integer)):
            raise TypeError('v must be an integer')
        if v < 0:
            raise ParamError('Point count must be non-negative', v=v)
        self._v = int(v)
        self._blocks: List[Block] = [normalize_block(block, self._v)
                                     for block in (blocks if blocks is not None else [])]

    @classmethod
    def from_qonfig(cls,
                    config: Qonfig['Design']
                    ) -> 'Design':
        """Create an Instance from Qonfig

        Args:
            config: Qonfig of class

        Returns:
            Design
        """
        return cls(v=config['v'], blocks=config['blocks'])

    def to_qonfig(self) -> 'Qonfig[Design]':
        """Create a Qonfig from Instance

        Returns:
            Qonfig[Design]
        """
        config = Qonfig(self.__class__)
        config['v'] = self._v
        config['blocks'] = [list(block) for block in self._blocks]
        return config

    @property
    def v(self) -> int:
        """Number of points

        Returns:
            int
        """
        return self._v

    @property
    def blocks(self) -> List[Block]:
        """Blocks as sorted tuples, in stored order

        Returns:
            List[Block]
        """
        return list(self._blocks)

    @property
    def b(self) -> int:
        """Number of blocks

        Returns:
            int
        """
        return len(self._blocks)

    def block_sizes(self) -> List[int]:
        """Return the distinct block sizes in increasing order

        Returns:
            List[int]
        """
        return sorted(set(len(block) for block in self._blocks))

    def canonical(self) -> Tuple[Block, ...]:
        """Return the blocks as a sorted multiset

        Returns:
            Tuple[Block, ...]
        """
        return tuple(sorted(self._blocks))

    def relabel(self,
                mapping: Union[Sequence[int], Dict[int, int], np.ndarray],
                v: Optional[int] = None) -> 'Design':
        """Return the design with every point x replaced by mapping[x]

        Args:
            mapping: injective map of the labels 0..v-1
            v: point count of the target, defaults to the current v

        Returns:
            Design

        Raises:
            ParamError: mapping is not injective on [0, v)
        """
        image = [int(mapping[point]) for point in range(self._v)]
        if len(set(image)) != len(image):
            raise ParamError('Relabelling must be injective')
        return Design(self._v if v is None else v,
                      [[image[point] for point in block] for block in self._blocks])

    def point_degrees(self) -> np.ndarray:
        """Return the number of blocks through every point

        Returns:
            np.ndarray
        """
        if not self._blocks:
            return np.zeros(self._v, dtype=np.int64)
        flat = np.fromiter((point for block in self._blocks for point in block), dtype=np.int64)
        return np.bincount(flat, minlength=self._v)

    def __len__(self) -> int:
        """Return the number of blocks

        Returns:
            int
        """
        return len(self._blocks)

    def __iter__(self) -> Iterator[Block]:
        """Iterate over the blocks

        Yields:
            Block
        """
        yield from self._blocks

    def __getitem__(self, index: int) -> Block:
        """Return one block

        Args:
            index: position in the block list

        Returns:
            Block
        """
        return self._blocks[index]

    def __eq__(self, other: object) -> bool:
        """Compare designs as sorted multisets of blocks

        Args:
            other: object compared to

        Returns:
            bool
        """
        if not isinstance(other, Design):
            return False
        return self._v == other._v and self.canonical() == other.canonical()

    def __str__(self) -> str:
        """Return string representation of the design

        Returns:
            str
        """
        return '{}(v={}, b={})'.format(self.__class__.__name__, self._v, self.b)

    __repr__ = __str__


class Gdd(Design):
    """A design with a partition of its points into groups and a block size k.

    An optional resolution lists the parallel classes as lists of block indices.
    Validity as a group divisible design is decided by
    :func:`pentaforge.verify.verify_gdd`, not on construction.

    """

    _qonfig_defaults_dict = {
        'v': {'doc': 'Number of points',
              'default': 0},
        'blocks': {'doc': 'List of blocks, each a list of point labels',
                   'default': None},
        'groups': {'doc': 'Partition of the points into groups',
                   'default': None},
        'k': {'doc': 'Block size',
              'default': 0},
        'resolution': {'doc': 'Parallel classes as lists of block indices, None if unresolved',
                       'default': None},
    }
    _qonfig_never_receives_values = True

    def __init__(self,
                 v: int,
                 blocks: Optional[Iterable[Iterable[int]]],
                 groups: Sequence[Iterable[int]],
                 k: int,
                 resolution: Optional[Sequence[Iterable[int]]] = None) -> None:
        """Initialize the group divisible design

        Args:
            v: number of points
            blocks: blocks as iterables of point labels
            groups: partition of [0, v) into groups
            k: block size
            resolution: parallel classes given as block indices

        Raises:
            PartitionError: groups do not partition the point set
        """
        super().__init__(v, blocks)
        self._groups: List[Tuple[int, ...]] = [tuple(sorted(int(p) for p in group))
                                               for group in groups]
        self._gdd_type = type_of_groups(self._groups, self._v)
        self._k = int(k)
        self._resolution: Optional[List[Tuple[int, ...]]] = None
        if resolution is not None:
            self._resolution = [tuple(int(index) for index in cls) for cls in resolution]
            for cls in self._resolution:
                for index in cls:
                    if index < 0 or index >= self.b:
                        raise PartitionError('Resolution refers to a missing block',
                                             index=index, b=self.b)

    @classmethod
    def from_qonfig(cls,
                    config: Qonfig['Gdd']
                    ) -> 'Gdd':
        """Create an Instance from Qonfig

        Args:
            config: Qonfig of class

        Returns:
            Gdd
        """
        return cls(v=config['v'], blocks=config['blocks'], groups=config['groups'],
                   k=config['k'], resolution=config['resolution'])

    def to_qonfig(self) -> 'Qonfig[Gdd]':
        """Create a Qonfig from Instance

        Returns:
            Qonfig[Gdd]
        """
        config = Qonfig(self.__class__)
        config['v'] = self._v
        config['blocks'] = [list(block) for block in self._blocks]
        config['groups'] = [list(group) for group in self._groups]
        config['k'] = self._k
        config['resolution'] = (None if self._resolution is None
                                else [list(cls) for cls in self._resolution])
        return config

    @property
    def groups(self) -> List[Tuple[int, ...]]:
        """Groups as sorted tuples

        Returns:
            List[Tuple[int, ...]]
        """
        return list(self._groups)

    @property
    def k(self) -> int:
        """Block size

        Returns:
            int
        """
        return self._k

    @property
    def gdd_type(self) -> GddType:
        """Normalized type of the groups

        Returns:
            GddType
        """
        return self._gdd_type

    @property
    def resolution(self) -> Optional[List[Tuple[int, ...]]]:
        """Parallel classes as tuples of block indices, or None

        Returns:
            Optional[List[Tuple[int, ...]]]
        """
        return None if self._resolution is None else list(self._resolution)

    def as_design(self) -> Design:
        """Drop groups and resolution

        Returns:
            Design
        """
        return Design(self._v, self._blocks)

    def group_of_points(self) -> np.ndarray:
        """Return the group index of every point

        Returns:
            np.ndarray
        """
        index = np.empty(self._v, dtype=np.int64)
        for number, group in enumerate(self._groups):
            index[list(group)] = number
        return index

    def __eq__(self, other: object) -> bool:
        """Compare blocks, groups and block size

        Args:
            other: object compared to

        Returns:
            bool
        """
        if not isinstance(other, Gdd):
            return False
        return (Design.__eq__(self, other)
                and sorted(self._groups) == sorted(other._groups)
                and self._k == other._k)

    def __str__(self) -> str:
        """Return string representation of the group divisible design

        Returns:
            str
        """
        return 'Gdd(k={}, type={}, b={})'.format(self._k, self._gdd_type, self.b)

    __repr__ = __str__
