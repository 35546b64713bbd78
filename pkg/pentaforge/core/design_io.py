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
"""Reading and writing the line oriented design file format.

A design file looks like::

    # PENT(4,13) developed from the catalog
    DESIGN v=44 kind=PENT
    K=4 R=13
    BLOCKS
    0 3 5 17
    ...

Group divisible designs carry ``K=<k> TYPE=<type>``, a ``GROUPS`` section before ``BLOCKS`` and,
for kind RGDD, a ``RESOLUTION`` section with one parallel class of block indices per line.

Comments may appear anywhere. They are kept in file order without the leading ``#`` and
surrounding blanks, and :func:`format_design` writes them as ``# <text>`` lines before the
header, so only files in that canonical form are reproduced byte for byte.

"""

import logging
import os
import re
from typing import (
    Dict,
    List,
    NamedTuple,
    Optional,
    Sequence,
    Union,
)
from pentaforge.core._exceptions import (
    ParamError,
    ParseError,
    PentaforgeError,
)
from pentaforge.core.design import (
    Design,
    Gdd,
)
from pentaforge.core.gdd_type import (
    format_gdd_type,
    parse_gdd_type,
)

logger = logging.getLogger(__name__)

KINDS = ('PENT', 'GDD', 'RGDD', 'PLS')
_HEADER = re.compile(r'^DESIGN\s+v=([0-9]+)\s+kind=([A-Z]+)$')
_SECTIONS = ('GROUPS', 'BLOCKS', 'RESOLUTION')


class DesignFile(NamedTuple):
    """Content of a design file: the design, its kind and the optional K/R parameters"""

    design: Design
    kind: str
    k: Optional[int] = None
    r: Optional[int] = None
    comments: Sequence[str] = ()


def _infer_kind(design: Design, r: Optional[int]) -> str:
    if isinstance(design, Gdd):
        return 'RGDD' if design.resolution is not None else 'GDD'
    return 'PENT' if r is not None else 'PLS'


def format_design(design: Union[Design, DesignFile],
                  kind: Optional[str] = None,
                  k: Optional[int] = None,
                  r: Optional[int] = None,
                  comments: Sequence[str] = ()) -> str:
    """Write a design in the design file format

    Args:
        design: the design, or a parsed DesignFile
        kind: PENT, GDD, RGDD or PLS, inferred when None
        k: block size written on the K line
        r: replication number written on the K line of a PENT
        comments: comment lines written first, without the leading '# '

    Returns:
        str

    Raises:
        ParamError: unknown kind or a GDD kind for a design without groups
    """
    if isinstance(design, DesignFile):
        return format_design(design.design, design.kind, design.k, design.r, design.comments)
    if kind is None:
        kind = _infer_kind(design, r)
    if kind not in KINDS:
        raise ParamError('Unknown design kind', kind=kind)
    is_gdd = kind in ('GDD', 'RGDD')
    if is_gdd and not isinstance(design, Gdd):
        raise ParamError('Kind needs a design with groups', kind=kind)
    if isinstance(design, Gdd) and k is None:
        k = design.k
    lines = ['# {}'.format(comment) if comment else '#' for comment in comments]
    lines.append('DESIGN v={} kind={}'.format(design.v, kind))
    if k is not None:
        if is_gdd:
            lines.append('K={} TYPE={}'.format(k, format_gdd_type(design.gdd_type)))
        elif r is not None:
            lines.append('K={} R={}'.format(k, r))
        else:
            lines.append('K={}'.format(k))
    if is_gdd:
        lines.append('GROUPS')
        lines.extend(' '.join(str(point) for point in group) for group in design.groups)
    lines.append('BLOCKS')
    lines.extend(' '.join(str(point) for point in block) for block in design)
    if kind == 'RGDD':
        if design.resolution is None:
            raise ParamError('Kind RGDD needs a resolution')
        lines.append('RESOLUTION')
        lines.extend(' '.join(str(index) for index in cls) for cls in design.resolution)
    return '\n'.join(lines) + '\n'


def _parse_labels(line: str, number: int) -> List[int]:
    try:
        return [int(token) for token in line.split()]
    except ValueError:
        raise ParseError('Expected integer labels', line=number)


def parse_design(text: str) -> DesignFile:
    """Parse the design file format

    Comment lines anywhere in the file are collected in order, stripped of ``#`` and blanks.

    Args:
        text: content of a design file

    Returns:
        DesignFile

    Raises:
        ParseError: missing header, unknown section, malformed line or a TYPE that
                    contradicts the groups
    """
    comments: List[str] = []
    header = None
    k: Optional[int] = None
    r: Optional[int] = None
    stated_type = None
    sections: Dict[str, List[List[int]]] = {name: [] for name in _SECTIONS}
    section = None
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith('#'):
            comments.append(line[1:].strip())
            continue
        if header is None:
            header = _HEADER.match(line)
            if header is None:
                raise ParseError('Expected DESIGN header', line=number)
            continue
        if line in _SECTIONS:
            section = line
            continue
        if section is None and line.startswith('K='):
            fields = line.split(None, 1)
            try:
                k = int(fields[0][2:])
            except ValueError:
                raise ParseError('Malformed K line', line=number)
            rest = fields[1] if len(fields) > 1 else ''
            if rest.startswith('R='):
                try:
                    r = int(rest[2:])
                except ValueError:
                    raise ParseError('Malformed R value', line=number)
            elif rest.startswith('TYPE='):
                stated_type = parse_gdd_type(rest[5:])
            elif rest:
                raise ParseError('Unexpected field on K line', line=number)
            continue
        if section is None:
            raise ParseError('Data outside of a section', line=number)
        sections[section].append(_parse_labels(line, number))
    if header is None:
        raise ParseError('Expected DESIGN header')
    v = int(header.group(1))
    kind = header.group(2)
    if kind not in KINDS:
        raise ParseError('Unknown design kind', kind=kind)
    try:
        if kind in ('GDD', 'RGDD'):
            if k is None:
                raise ParseError('GDD files need a K line')
            resolution = sections['RESOLUTION'] if kind == 'RGDD' else None
            design: Design = Gdd(v, sections['BLOCKS'], sections['GROUPS'], k, resolution)
            if stated_type is not None and stated_type != design.gdd_type:
                raise ParseError('TYPE does not match the groups',
                                 stated=stated_type, found=design.gdd_type)
        else:
            design = Design(v, sections['BLOCKS'])
    except ParseError:
        raise
    except PentaforgeError as error:
        raise ParseError('Invalid design data: {}'.format(error))
    return DesignFile(design=design, kind=kind, k=k, r=r, comments=tuple(comments))


def load_design(path: str) -> DesignFile:
    """Read a design file

    Args:
        path: location of the file

    Returns:
        DesignFile
    """
    with open(os.path.expanduser(path), encoding='utf-8') as infile:
        content = infile.read()
    logger.debug('Read design file %s', path)
    return parse_design(content)


def save_design(path: str,
                design: Union[Design, DesignFile],
                overwrite: bool = False,
                **kwargs) -> None:
    """Write a design file

    Args:
        path: location of the file
        design: design or DesignFile to write
        overwrite: replace an existing file
        kwargs: kind, k, r and comments passed to format_design

    Raises:
        IOError: File already exists
    """
    file_name = os.path.expanduser(path)
    if os.path.exists(file_name) and not overwrite:
        raise IOError('File {} already exists'.format(file_name))
    directory = os.path.dirname(file_name)
    if directory:
        os.makedirs(directory, exist_ok=True)
    with open(file_name, 'w', encoding='utf-8') as outfile:
        outfile.write(format_design(design, **kwargs))
    logger.info('Wrote design file %s', file_name)
