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
"""Registry of known existence and nonexistence of pentagonal geometries

Answers come in layers. ``theory`` facts follow from counting arguments and stated
nonexistence results. ``catalog`` facts are certified by a catalog entry or by a construction
of this package that verifies its output. ``cited`` facts depend on designs from the literature
that are not built here and are flagged ``conditional``. Everything else is ``open``.
"""

from functools import lru_cache
from typing import (
    FrozenSet,
    NamedTuple,
    Optional,
)
from pentaforge.catalog import default_catalog
from pentaforge.core._exceptions import ParameterRangeError
from pentaforge.core.params import point_count
from pentaforge.spectrum.arithmetic import (
    admissible,
    pent5_families,
)
from pentaforge.spectrum.recipes import no_olp_exceptions
from pentaforge.spectrum.tables import (
    CONSTRUCTION_TABLE,
    DIRECT_PENT5,
    M10_PUBLISHED,
    M40_PUBLISHED,
    ONE_OLP,
    ONE_OLP_INGREDIENTS,
)

STATUSES = ('exists', 'exists_no_olp', 'exists_one_olp', 'nonexistent', 'open')
LAYERS = ('theory', 'catalog', 'cited', 'open')

#: PENT(5, r) for r = 1 mod 5, r != 6, not known to exist
PENT5_ONE_MOD_FIVE_EXCEPTIONS = (11, 16, 36, 56, 66, 81, 96, 116)

#: (k, r, opposite line pairs) built and verified by pentaforge.construct
CONSTRUCTED = {
    (5, 86, 35): 'GDD5-2^35 inflated by 5, groups overlaid with the degenerate PENT(5,1)',
}


class ExistenceStatus(NamedTuple):
    """Known status of a PENT(k, r), optionally with a prescribed number of opposite line pairs"""

    status: str
    provenance: str
    layer: str = 'theory'
    conditional: bool = False

    @property
    def exists(self) -> bool:
        """True when existence is known

        Returns:
            bool
        """
        return self.status.startswith('exists')

    def __str__(self) -> str:
        """Return string representation of the status

        Returns:
            str
        """
        text = '{} [{}] {}'.format(self.status, self.layer, self.provenance)
        if self.conditional:
            text += ' (conditional)'
        return text


def _open(provenance: str = 'not decided') -> ExistenceStatus:
    return ExistenceStatus('open', provenance, 'open')


def _none(provenance: str) -> ExistenceStatus:
    return ExistenceStatus('nonexistent', provenance, 'theory')


def _cited(status: str, provenance: str) -> ExistenceStatus:
    return ExistenceStatus(status, provenance, 'cited', True)


@lru_cache(maxsize=None)
def catalog_values(k: int) -> FrozenSet[int]:
    """Return the r of the catalog PENT(k, r) entries

    Args:
        k: block size

    Returns:
        FrozenSet[int]
    """
    return frozenset(entry.r for entry in default_catalog()
                     if entry.kind == 'PENT' and entry.k == k)


@lru_cache(maxsize=None)
def _pent5_no_olp_sources() -> FrozenSet[int]:
    values = set()
    for published in (M40_PUBLISHED, M10_PUBLISHED):
        for r0, listed in published.items():
            values.add(r0)
            values.update(listed)
    for row in CONSTRUCTION_TABLE:
        values.add(row.r0)
        values.update(row.values)
    return frozenset(values)


def pent5_no_olp_known(r: int) -> bool:
    """Return True when a PENT(5, r) without opposite line pair is known from the literature

    Covers the two recursive families of every catalog PENT(5, .) and the values built from
    TD-patched 5-GDDs.

    Args:
        r: replication number

    Returns:
        bool
    """
    if r in _pent5_no_olp_sources():
        return True
    return any(family.contains(r) for base in DIRECT_PENT5 for family in pent5_families(base))


def _constructed(k: int, r: int) -> Optional[ExistenceStatus]:
    for (k_built, r_built, _), provenance in CONSTRUCTED.items():
        if (k_built, r_built) == (k, r):
            return ExistenceStatus('exists', provenance, 'catalog')
    return None


def _olp_count_feasible(k: int, r: int, olps: int) -> bool:
    rest = point_count(k, r) - 2 * olps * k
    return rest == 0 or rest >= k * k + 1


def _facts3(r: int, olps: Optional[int]) -> ExistenceStatus:
    if r == 6:
        return _none('PENT(3, r) exists for all admissible r except 4 and 6')
    if r == 7:
        if olps == 0:
            return _none('PENT(3, 7) always contains an opposite line pair')
        if olps is None:
            return _cited('exists', 'block size 3 spectrum')
    if olps not in (None, 0):
        return _open()
    if r % 6 == 3 and r >= 33:
        return ExistenceStatus('exists_no_olp',
                               'pent3_direct(m) with m = {}, connected deficiency graph'
                               .format((r - 3) // 6), 'catalog')
    return _cited('exists_no_olp', 'block size 3 spectrum without opposite line pairs')


def _facts4(r: int, olps: Optional[int]) -> ExistenceStatus:
    if olps in (None, 0):
        if r in catalog_values(4):
            return ExistenceStatus('exists_no_olp', 'catalog entry PENT-4-{}'.format(r),
                                   'catalog')
        if r not in no_olp_exceptions():
            return _cited('exists_no_olp', 'PENT(4) recipe tables with cited 4-GDDs')
        if olps == 0:
            return _open('possible exception of the PENT(4) no-OLP spectrum')
        if r % 4 == 1:
            return _cited('exists', 'PENT(4, r) for r = 1 mod 4, r != 5')
        return _open()
    if olps == 1:
        row = ONE_OLP[[row.residue for row in ONE_OLP].index(r % 44)]
        if r >= row.first_r or r in {ingredient.r for ingredient in ONE_OLP_INGREDIENTS}:
            return _cited('exists_one_olp', 'PENT(4) one-OLP recipe table with cited 4-GDDs')
        return _open()
    return _open('j opposite line pairs exist for sufficiently large r')


def _facts5(r: int, olps: Optional[int]) -> ExistenceStatus:
    if olps in (None, 0):
        if r in catalog_values(5):
            return ExistenceStatus('exists_no_olp', 'catalog entry PENT-5-{}'.format(r),
                                   'catalog')
        if pent5_no_olp_known(r):
            return _cited('exists_no_olp', 'PENT(5) families and TD-patched 5-GDDs')
        if olps == 0:
            return _open()
        constructed = _constructed(5, r)
        if constructed is not None:
            return constructed
        if r % 5 == 1 and r not in PENT5_ONE_MOD_FIVE_EXCEPTIONS:
            return _cited('exists', 'PENT(5, r) for r = 1 mod 5, r != 6')
    return _open()


def facts(k: int, r: int, olps: Optional[int] = None) -> ExistenceStatus:
    """Look up what is known about PENT(k, r)

    Args:
        k: block size, at least 2
        r: replication number, at least 1
        olps: required number of opposite line pairs, None for any number

    Returns:
        ExistenceStatus

    Raises:
        ParameterRangeError: k < 2, r < 1 or olps < 0
    """
    if k < 2 or r < 1:
        raise ParameterRangeError('PENT(k, r) needs k >= 2 and r >= 1', k=k, r=r)
    if olps is not None and olps < 0:
        raise ParameterRangeError('Number of opposite line pairs must be non-negative',
                                  olps=olps)
    if not admissible(k, r):
        return _none('r(r - 1) is not divisible by k')
    if olps and not _olp_count_feasible(k, r, olps):
        return _none('deficiency graph cannot hold {} copies of K_{{k,k}}'.format(olps))
    if olps is not None and (k, r, olps) in CONSTRUCTED:
        return ExistenceStatus('exists', CONSTRUCTED[(k, r, olps)], 'catalog')
    if r == 1:
        if olps in (None, 1):
            return ExistenceStatus('exists_one_olp', 'degenerate PENT(k, 1)')
        return _none('the only PENT(k, 1) is an opposite line pair')
    if r < k:
        return _none('a non-degenerate PENT(k, r) has r >= k')
    if r == k:
        if k in (2, 3, 7):
            return ExistenceStatus('exists_no_olp', 'deficiency graph is a Moore graph')
        if k == 57:
            return _open('PENT(57, 57) is undecided')
        return _none('PENT(k, k) exists only for k = 2, 3, 7 and possibly 57')
    if r == k + 1:
        if k in (2, 6):
            if olps is None:
                return ExistenceStatus('exists', 'point and opposite line removed from '
                                       'PENT({0}, {0})'.format(r))
            return _open()
        if k == 56:
            return _open('PENT(56, 57) is undecided')
        return _none('PENT(k - 1, k) exists only for k = 3, 7 and possibly 57')
    if k == 3:
        return _facts3(r, olps)
    if k == 4:
        return _facts4(r, olps)
    if k == 5:
        return _facts5(r, olps)
    return _open()
