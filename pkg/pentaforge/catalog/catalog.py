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
"""Catalog of explicitly given designs and their instantiation.

Every data file holds one entry::

    # free text description
    ENTRY PENT-4-13
    DESIGN v=44 kind=PENT
    K=4 R=13
    AUT seg=0,44,4 J=11
    CLAIM girth=6 connected=1 olp=0 opp_prefix=4
    BASE
    3 38 41 42
    ...

GDD entries replace R by ``TYPE=<type>``, carry ``PARTITION residues <modulus> <lo> <hi>``
and ``PARTITION interval <lo> <hi>`` lines that build the groups, and claim ``blocks=<b>``.
Base blocks are kept exactly as written; they are sorted on development only.

"""

import logging
import os
from functools import lru_cache
from typing import (
    Any,
    Dict,
    Iterator,
    List,
    NamedTuple,
    Optional,
    Sequence,
    Tuple,
    Union,
)
import numpy as np
from pentaforge.autogen.automorphism import (
    AutomorphismSpec,
    develop,
)
from pentaforge.core._exceptions import (
    CatalogNotFoundError,
    DataCorruptionError,
    ParseError,
)
from pentaforge.core.design import (
    Design,
    Gdd,
)
from pentaforge.core.design_io import format_design
from pentaforge.core.gdd_type import (
    GddType,
    parse_gdd_type,
)
from pentaforge.verify.gdd import (
    GddReport,
    verify_gdd,
)
from pentaforge.verify.pent import (
    PentReport,
    compare_claims,
    verify_pent,
)

logger = logging.getLogger(__name__)

DATA_DIR = os.path.join(os.path.dirname(os.path.abspath(__file__)), 'data')


class CatalogEntry(NamedTuple):
    """One catalog design: parameters, base blocks, automorphism and claimed statistics"""

    id: str
    kind: str
    v: int
    k: int
    r: Optional[int]
    gdd_type: Optional[GddType]
    base_blocks: Tuple[Tuple[int, ...], ...]
    automorphism: AutomorphismSpec
    claims: Dict[str, int]
    partitions: Tuple[Tuple[Any, ...], ...] = ()
    description: str = ''

    def groups(self) -> List[List[int]]:
        """Build the groups of a GDD entry from its PARTITION lines

        Returns:
            List[List[int]]
        """
        groups: List[List[int]] = []
        for partition in self.partitions:
            if partition[0] == 'residues':
                modulus, low, high = partition[1:]
                groups.extend([point for point in range(low, high)
                               if (point - low) % modulus == residue]
                              for residue in range(modulus))
            else:
                low, high = partition[1:]
                groups.append(list(range(low, high)))
        return groups

    def develop(self) -> Union[Design, Gdd]:
        """Develop the base blocks without verification

        Returns:
            Union[Design, Gdd]
        """
        blocks = develop(self.base_blocks, self.automorphism)
        if self.kind == 'GDD':
            return Gdd(self.v, blocks, self.groups(), self.k)
        return Design(self.v, blocks)


def _parse_ints(line: str, entry_id: str) -> List[int]:
    try:
        return [int(token) for token in line.replace(',', ' ').split()]
    except ValueError:
        raise ParseError('Expected integers in catalog data', entry=entry_id, line=line)


def parse_entry(text: str, source: str = '') -> CatalogEntry:
    """Parse the text of one catalog data file

    Args:
        text: file content
        source: file name used in error messages

    Returns:
        CatalogEntry

    Raises:
        ParseError: a required line is missing or malformed
    """
    fields: Dict[str, Any] = {'partitions': [], 'claims': {}, 'base': [], 'r': None,
                              'gdd_type': None}
    description = []
    in_base = False
    for raw in text.splitlines():
        line = raw.strip()
        if not line:
            continue
        if line.startswith('#'):
            description.append(line[1:].strip())
            continue
        if in_base:
            fields['base'].append(tuple(_parse_ints(line, fields.get('id', source))))
            continue
        keyword, _, rest = line.partition(' ')
        if keyword == 'ENTRY':
            fields['id'] = rest.strip()
        elif keyword == 'DESIGN':
            values = dict(token.split('=', 1) for token in rest.split())
            fields['v'] = int(values['v'])
            fields['kind'] = values['kind']
        elif keyword.startswith('K='):
            fields['k'] = int(keyword[2:])
            if rest.startswith('R='):
                fields['r'] = int(rest[2:])
            elif rest.startswith('TYPE='):
                fields['gdd_type'] = parse_gdd_type(rest[5:])
        elif keyword == 'AUT':
            fields['automorphism'] = AutomorphismSpec.parse(rest)
        elif keyword == 'PARTITION':
            tokens = rest.split()
            fields['partitions'].append((tokens[0],) + tuple(int(t) for t in tokens[1:]))
        elif keyword == 'CLAIM':
            for token in rest.split():
                key, _, value = token.partition('=')
                fields['claims'][key] = int(value)
        elif keyword == 'BASE':
            in_base = True
        else:
            raise ParseError('Unknown catalog keyword', keyword=keyword, source=source)
    for required in ('id', 'v', 'kind', 'k', 'automorphism'):
        if required not in fields:
            raise ParseError('Catalog entry misses a field', field=required, source=source)
    if not fields['base']:
        raise ParseError('Catalog entry has no base blocks', source=source)
    return CatalogEntry(id=fields['id'], kind=fields['kind'], v=fields['v'], k=fields['k'],
                        r=fields['r'], gdd_type=fields['gdd_type'],
                        base_blocks=tuple(fields['base']),
                        automorphism=fields['automorphism'], claims=fields['claims'],
                        partitions=tuple(fields['partitions']),
                        description=' '.join(description))


class EntryVerification(NamedTuple):
    """Verification report of a catalog entry and its claim mismatches"""

    entry_id: str
    report: Union[PentReport, GddReport]
    mismatches: List[str]

    @property
    def ok(self) -> bool:
        """True when the design is valid and matches every claim

        Returns:
            bool
        """
        return self.report.valid and not self.mismatches


def _sort_key(entry: CatalogEntry) -> Tuple[int, int, int, str]:
    return (0 if entry.kind == 'PENT' else 1, entry.k,
            entry.r if entry.r is not None else entry.v, entry.id)


class Catalog(object):
    """Collection of catalog entries keyed by id, listed in (kind, k, r, id) order"""

    def __init__(self, entries: Sequence[CatalogEntry]) -> None:
        """Initialize the catalog

        Args:
            entries: catalog entries

        Raises:
            ParseError: two entries share an id
        """
        self._entries: Dict[str, CatalogEntry] = {}
        for entry in sorted(entries, key=_sort_key):
            if entry.id in self._entries:
                raise ParseError('Duplicate catalog id', entry=entry.id)
            self._entries[entry.id] = entry

    @classmethod
    def load(cls, data_dir: str = DATA_DIR) -> 'Catalog':
        """Read every *.txt file of a data directory

        Args:
            data_dir: directory of catalog data files

        Returns:
            Catalog
        """
        entries = []
        for name in sorted(os.listdir(data_dir)):
            if not name.endswith('.txt'):
                continue
            with open(os.path.join(data_dir, name), encoding='utf-8') as infile:
                entries.append(parse_entry(infile.read(), name))
        logger.debug('Loaded %d catalog entries from %s', len(entries), data_dir)
        return cls(entries)

    def __len__(self) -> int:
        """Return the number of entries

        Returns:
            int
        """
        return len(self._entries)

    def __iter__(self) -> Iterator[CatalogEntry]:
        """Iterate over the entries in catalog order

        Yields:
            CatalogEntry
        """
        yield from self._entries.values()

    def __contains__(self, entry_id: object) -> bool:
        """Return True for a known id

        Args:
            entry_id: catalog id

        Returns:
            bool
        """
        return isinstance(entry_id, str) and self._normalize(entry_id) in self._entries

    @staticmethod
    def _normalize(entry_id: str) -> str:
        # ids of mixed types contain a space; an underscore is accepted instead
        return entry_id.strip().replace('_', ' ')

    def get(self, entry_id: str) -> CatalogEntry:
        """Return the entry with the given id

        Args:
            entry_id: catalog id such as 'PENT-4-13' or 'GDD5-10^10 18^1'

        Returns:
            CatalogEntry

        Raises:
            CatalogNotFoundError: unknown id
        """
        entry = self._entries.get(self._normalize(entry_id))
        if entry is None:
            raise CatalogNotFoundError('Unknown catalog id', entry_id=entry_id)
        return entry

    def list_entries(self,
                     kind: Optional[str] = None,
                     k: Optional[int] = None,
                     r: Optional[int] = None) -> List[str]:
        """Return the ids matching the filter, in catalog order

        Args:
            kind: PENT or GDD
            k: block size
            r: replication number of PENT entries

        Returns:
            List[str]
        """
        return [entry.id for entry in self
                if (kind is None or entry.kind == kind)
                and (k is None or entry.k == k)
                and (r is None or entry.r == r)]

    def verify_entry(self, entry: Union[str, CatalogEntry]) -> EntryVerification:
        """Develop an entry, verify it and compare it with its claims

        Args:
            entry: catalog id or entry

        Returns:
            EntryVerification
        """
        if isinstance(entry, str):
            entry = self.get(entry)
        design = entry.develop()
        report: Union[PentReport, GddReport]
        if entry.kind == 'GDD':
            report = verify_gdd(design, entry.k)
            mismatches = []
            if entry.gdd_type is not None and str(entry.gdd_type) != report.gdd_type:
                mismatches.append('claimed type {}, found {}'.format(entry.gdd_type,
                                                                    report.gdd_type))
            if 'blocks' in entry.claims and entry.claims['blocks'] != design.b:
                mismatches.append('claimed blocks={}, found {}'.format(entry.claims['blocks'],
                                                                      design.b))
        else:
            report = verify_pent(design, entry.k, entry.r)
            mismatches = compare_claims(report, entry.claims)
        logger.info('Catalog entry %s: %s', entry.id,
                    'ok' if report.valid and not mismatches else 'FAILED')
        return EntryVerification(entry.id, report, mismatches)

    def instantiate(self, entry_id: str) -> Union[Design, Gdd]:
        """Develop and verify an entry

        Args:
            entry_id: catalog id

        Returns:
            Union[Design, Gdd]

        Raises:
            DataCorruptionError: the developed design fails verification or a claim
        """
        entry = self.get(entry_id)
        verification = self.verify_entry(entry)
        if not verification.ok:
            raise DataCorruptionError(
                'Catalog entry does not develop into the claimed design',
                entry_id=entry.id,
                problems='; '.join(verification.report.violations + verification.mismatches))
        return entry.develop()

    def opp_prefix(self, entry_id: str) -> List[Tuple[int, int]]:
        """Check that base block i is the opposite line of point i for i < opp_prefix

        Args:
            entry_id: id of a PENT entry

        Returns:
            List[Tuple[int, int]]: (point x, base block index) assignments

        Raises:
            DataCorruptionError: a listed base block is not the opposite line of its point
        """
        entry = self.get(entry_id)
        prefix = entry.claims.get('opp_prefix', 0)
        design = entry.develop()
        report = verify_pent(design, entry.k, entry.r)
        assignments = []
        for index in range(prefix):
            opposite = report.opp_map[index]
            block = tuple(sorted(entry.base_blocks[index]))
            if opposite < 0 or design[opposite] != block:
                raise DataCorruptionError('Base block is not the opposite line of its point',
                                          entry_id=entry.id, point=index)
            assignments.append((index, index))
        return assignments

    def emit(self, entry_id: str) -> str:
        """Return the verified design of an entry in the design file format

        Args:
            entry_id: catalog id

        Returns:
            str
        """
        entry = self.get(entry_id)
        design = self.instantiate(entry_id)
        comments = [entry.id] + ([entry.description] if entry.description else [])
        if entry.kind == 'GDD':
            return format_design(design, kind='GDD', k=entry.k, comments=comments)
        return format_design(design, kind='PENT', k=entry.k, r=entry.r, comments=comments)

    def mutate(self, entry_id: str, seed: int) -> CatalogEntry:
        """Return the entry with one point of one base block replaced

        The block, the position and the new label are drawn from
        ``np.random.default_rng(seed)``; the new label is not already in the block.

        Args:
            entry_id: catalog id
            seed: generator seed

        Returns:
            CatalogEntry
        """
        entry = self.get(entry_id)
        rng = np.random.default_rng(seed)
        index = int(rng.integers(len(entry.base_blocks)))
        block = list(entry.base_blocks[index])
        position = int(rng.integers(len(block)))
        choices = [point for point in range(entry.v) if point not in block]
        block[position] = int(choices[int(rng.integers(len(choices)))])
        base = list(entry.base_blocks)
        base[index] = tuple(block)
        logger.debug('Mutated %s: base block %d position %d', entry.id, index, position)
        return entry._replace(id='{}~{}'.format(entry.id, seed), base_blocks=tuple(base))


@lru_cache(maxsize=None)
def default_catalog() -> Catalog:
    """Return the catalog shipped with pentaforge, loaded once

    Returns:
        Catalog
    """
    return Catalog.load(DATA_DIR)


def list_entries(kind: Optional[str] = None,
                 k: Optional[int] = None,
                 r: Optional[int] = None) -> List[str]:
    """List ids of the default catalog, see :meth:`Catalog.list_entries`

    Args:
        kind: PENT or GDD
        k: block size
        r: replication number

    Returns:
        List[str]
    """
    return default_catalog().list_entries(kind=kind, k=k, r=r)


def get_entry(entry_id: str) -> CatalogEntry:
    """Return an entry of the default catalog

    Args:
        entry_id: catalog id

    Returns:
        CatalogEntry
    """
    return default_catalog().get(entry_id)


def instantiate(entry_id: str) -> Union[Design, Gdd]:
    """Develop and verify an entry of the default catalog

    Args:
        entry_id: catalog id

    Returns:
        Union[Design, Gdd]
    """
    return default_catalog().instantiate(entry_id)


def verify_entry(entry: Union[str, CatalogEntry]) -> EntryVerification:
    """Verify an entry of the default catalog against its claims

    Args:
        entry: catalog id or entry

    Returns:
        EntryVerification
    """
    return default_catalog().verify_entry(entry)


def opp_prefix(entry_id: str) -> List[Tuple[int, int]]:
    """Check the opposite line prefix of an entry of the default catalog

    Args:
        entry_id: catalog id

    Returns:
        List[Tuple[int, int]]
    """
    return default_catalog().opp_prefix(entry_id)


def emit(entry_id: str) -> str:
    """Return an entry of the default catalog as design file text

    Args:
        entry_id: catalog id

    Returns:
        str
    """
    return default_catalog().emit(entry_id)


def mutate(entry_id: str, seed: int) -> CatalogEntry:
    """Mutate an entry of the default catalog

    Args:
        entry_id: catalog id
        seed: generator seed

    Returns:
        CatalogEntry
    """
    return default_catalog().mutate(entry_id, seed)
