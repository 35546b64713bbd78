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
"""Pair coverage tables"""

from typing import (
    Dict,
    List,
    Tuple,
)
import numpy as np
from pentaforge.core.design import Design


def pair_counts(design: Design) -> np.ndarray:
    """Return the v x v table of how many blocks contain each pair.

    Only the upper triangle (x < y) is filled; the table is built with one
    ``np.bincount`` over the packed pair indices x * v + y of every block size.

    Args:
        design: the design

    Returns:
        np.ndarray
    """
    v = design.v
    counts = np.zeros(v * v, dtype=np.int64)
    by_size: Dict[int, List[Tuple[int, ...]]] = {}
    for block in design:
        by_size.setdefault(len(block), []).append(block)
    for size, blocks in by_size.items():
        array = np.asarray(blocks, dtype=np.int64)
        rows, cols = np.triu_indices(size, 1)
        packed = (array[:, rows] * v + array[:, cols]).ravel()
        counts += np.bincount(packed, minlength=v * v)
    return counts.reshape(v, v)


def collinearity(design: Design) -> np.ndarray:
    """Return the symmetric boolean matrix of collinear point pairs

    Args:
        design: the design

    Returns:
        np.ndarray
    """
    upper = pair_counts(design) > 0
    return upper | upper.T


def verify_pls(design: Design) -> List[Tuple[int, int, int]]:
    """Return the pairs lying on more than one block

    An empty list means the design is a partial linear space.

    Args:
        design: the design

    Returns:
        List[Tuple[int, int, int]]: (x, y, number of blocks) with x < y
    """
    counts = pair_counts(design)
    rows, cols = np.nonzero(counts > 1)
    return [(int(x), int(y), int(counts[x, y])) for x, y in zip(rows, cols)]


def repeated_blocks(design: Design) -> List[Tuple[int, ...]]:
    """Return the blocks that occur more than once

    Args:
        design: the design

    Returns:
        List[Tuple[int, ...]]
    """
    seen = set()
    repeated = []
    for block in design:
        if block in seen and block not in repeated:
            repeated.append(block)
        seen.add(block)
    return repeated
