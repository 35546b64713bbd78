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
"""Handlers of the pentaforge subcommands

Every handler takes the parsed arguments and the RunConfig and returns the exit code.
"""

import argparse
import json
import logging
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import (
    Any,
    Dict,
    Optional,
    Tuple,
)
from tqdm import tqdm
from pentaforge.catalog import default_catalog
from pentaforge.cli.config import RunConfig
from pentaforge.core._exceptions import ParamError
from pentaforge.core.design import (
    Design,
    Gdd,
)
from pentaforge.core.design_io import (
    DesignFile,
    format_design,
    load_design,
)
from pentaforge.construct import (
    degenerate_pent,
    inflate,
    m10_set,
    m40_set,
    m_set_53,
    pent3_base_blocks,
    pent3_deficiency_edges,
    pent3_direct,
    rgdd_from_mols,
    rgdd_to_gdd,
    sum_decompose,
    transversal_design,
    weights10,
    weights40,
    wfc_overlay,
)
from pentaforge.spectrum import (
    facts,
    pent5_families,
    plan_jolp,
    plan_construction53,
    replay_tables,
)
from pentaforge.verify import (
    difference_census,
    verify_gdd,
    verify_pent,
    verify_pls,
    verify_rgdd,
)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INVALID = 2
EXIT_MISSING = 3


def write_output(config: RunConfig, payload: Any, text: str) -> None:
    """Write the result as JSON or text to the output file or standard output

    Args:
        config: run configuration
        payload: JSON serialisable result
        text: human readable result
    """
    if config.format == 'json':
        content = json.dumps(payload, indent=2, sort_keys=True) + '\n'
    else:
        content = text if text.endswith('\n') else text + '\n'
    if config.output:
        with open(config.output, 'w', encoding='utf-8') as outfile:
            outfile.write(content)
        logger.info('Wrote %s', config.output)
    else:
        sys.stdout.write(content)


def write_design(config: RunConfig, design_file: DesignFile) -> None:
    """Write a design file to the output file or standard output

    Args:
        config: run configuration
        design_file: design with kind, parameters and comments
    """
    text = format_design(design_file)
    write_output(config, {'design': text}, text)


def load_source(source: str) -> DesignFile:
    """Load a catalog id or a design file

    Args:
        source: catalog id or path

    Returns:
        DesignFile
    """
    catalog = default_catalog()
    if source in catalog:
        entry = catalog.get(source)
        design = catalog.instantiate(source)
        return DesignFile(design, entry.kind, entry.k, entry.r, (entry.id,))
    return load_design(source)


def _require_gdd(source: str) -> Gdd:
    design = load_source(source).design
    if not isinstance(design, Gdd):
        raise ParamError('Source is not a GDD', source=source)
    return design


# catalog

def cmd_catalog_list(args: argparse.Namespace, config: RunConfig) -> int:
    """List catalog ids"""
    catalog = default_catalog()
    entries = [catalog.get(entry_id)
               for entry_id in catalog.list_entries(kind=args.kind, k=args.k, r=args.r)]
    payload = [{'id': entry.id, 'kind': entry.kind, 'k': entry.k, 'r': entry.r, 'v': entry.v,
                'type': str(entry.gdd_type) if entry.gdd_type is not None else None}
               for entry in entries]
    text = '\n'.join('{:<18} v={:<5} {}'.format(entry.id, entry.v, entry.description)
                     for entry in entries)
    write_output(config, payload, text)
    return EXIT_OK


def cmd_catalog_show(args: argparse.Namespace, config: RunConfig) -> int:
    """Show one catalog entry"""
    entry = default_catalog().get(args.id)
    payload = {'id': entry.id, 'kind': entry.kind, 'k': entry.k, 'r': entry.r, 'v': entry.v,
               'type': str(entry.gdd_type) if entry.gdd_type is not None else None,
               'automorphism': entry.automorphism.format(),
               'base_blocks': [list(block) for block in entry.base_blocks],
               'claims': dict(entry.claims), 'description': entry.description}
    lines = ['{} ({})'.format(entry.id, entry.description),
             'kind={} v={} k={}'.format(entry.kind, entry.v, entry.k),
             'automorphism {}'.format(entry.automorphism.format()),
             'base blocks {}'.format(len(entry.base_blocks))]
    if entry.r is not None:
        lines.append('r={}'.format(entry.r))
    if entry.gdd_type is not None:
        lines.append('type {}'.format(entry.gdd_type))
    lines.extend('claim {}={}'.format(key, value) for key, value in sorted(entry.claims.items()))
    write_output(config, payload, '\n'.join(lines))
    return EXIT_OK


def cmd_catalog_emit(args: argparse.Namespace, config: RunConfig) -> int:
    """Write the developed design of a catalog entry"""
    text = default_catalog().emit(args.id)
    write_output(config, {'design': text}, text)
    return EXIT_OK


# verify

def verify_catalog_id(entry_id: str) -> Dict[str, Any]:
    """Verify a catalog entry against the axioms and its claims

    Args:
        entry_id: catalog id

    Returns:
        Dict[str, Any]
    """
    result = default_catalog().verify_entry(entry_id)
    payload = result.report.to_dict()
    payload.update(id=result.entry_id, mismatches=list(result.mismatches), valid=result.ok)
    return payload


def verify_design_file(design_file: DesignFile,
                       k: Optional[int] = None,
                       r: Optional[int] = None) -> Dict[str, Any]:
    """Verify a parsed design file according to its kind

    Args:
        design_file: parsed design file
        k: block size, from the file when None
        r: replication number, from the file when None

    Returns:
        Dict[str, Any]
    """
    design = design_file.design
    k = design_file.k if k is None else k
    r = design_file.r if r is None else r
    kind = design_file.kind
    if kind == 'PLS' or k is None:
        repeated = verify_pls(design)
        return {'valid': not repeated, 'kind': 'PLS', 'v': design.v, 'b': design.b,
                'violations': ['pair {} {} on {} blocks'.format(*item) for item in repeated]}
    if kind == 'PENT':
        if r is None:
            raise ParamError('PENT design file needs R')
        try:
            return verify_pent(design, k, r).to_dict()
        except ParamError as error:
            return {'valid': False, 'kind': 'PENT', 'k': k, 'r': r, 'v': design.v,
                    'b': design.b, 'violations': [str(error)]}
    if kind == 'RGDD':
        return verify_rgdd(design, k).to_dict()
    return verify_gdd(design, k).to_dict()


def _verify_one(target: str, k: Optional[int], r: Optional[int]) -> Dict[str, Any]:
    if target in default_catalog():
        return verify_catalog_id(target)
    payload = verify_design_file(load_design(target), k, r)
    payload['id'] = target
    return payload


def _render_verification(payload: Dict[str, Any]) -> str:
    keys = [key for key in ('k', 'r', 'type', 'v', 'b', 'olp_count', 'girth', 'connected')
            if payload.get(key) is not None]
    head = '{}: {} {} {}'.format(payload.get('id', ''), 'VALID' if payload['valid'] else
                                 'INVALID', payload['kind'],
                                 ' '.join('{}={}'.format(key, payload[key]) for key in keys))
    lines = [head]
    lines.extend('  violation: {}'.format(item) for item in payload.get('violations', []))
    lines.extend('  claim mismatch: {}'.format(item) for item in payload.get('mismatches', []))
    return '\n'.join(lines)


def cmd_verify(args: argparse.Namespace, config: RunConfig) -> int:
    """Verify design files, catalog ids or the whole catalog"""
    show_progress = not args.quiet
    if args.all_catalog:
        targets = default_catalog().list_entries()
        if config.jobs > 1:
            with ProcessPoolExecutor(max_workers=config.jobs) as pool:
                results = list(tqdm(pool.map(verify_catalog_id, targets), total=len(targets),
                                    disable=not show_progress, file=sys.stderr, desc='verify'))
        else:
            results = [verify_catalog_id(target)
                       for target in tqdm(targets, disable=not show_progress, file=sys.stderr,
                                          desc='verify')]
    else:
        if not config.inputs:
            raise ParamError('Nothing to verify, give targets or --all-catalog')
        results = [_verify_one(target, args.k, args.r) for target in config.inputs]
    valid = all(payload['valid'] for payload in results)
    logger.info('Verified %d designs, %d invalid', len(results),
                sum(not payload['valid'] for payload in results))
    payload: Any = results if args.all_catalog or len(results) > 1 else results[0]
    write_output(config, payload, '\n'.join(_render_verification(item) for item in results))
    return EXIT_OK if valid else EXIT_INVALID


# construct

def cmd_construct_pent3(args: argparse.Namespace, config: RunConfig) -> int:
    """PENT(3, 6m + 3) with connected deficiency graph"""
    design = pent3_direct(args.m)
    r = 6 * args.m + 3
    write_design(config, DesignFile(design, 'PENT', 3, r, ('pent3_direct m={}'.format(args.m),)))
    return EXIT_OK


def cmd_construct_td(args: argparse.Namespace, config: RunConfig) -> int:
    """TD(k, q)"""
    gdd = transversal_design(args.k, args.q)
    write_design(config, DesignFile(gdd, 'GDD', args.k, None,
                                    ('TD({},{})'.format(args.k, args.q),)))
    return EXIT_OK


def cmd_construct_rgdd5(args: argparse.Namespace, config: RunConfig) -> int:
    """(k + 1)-GDD of type q^(k + 1) from a resolvable k-GDD of type q^k"""
    rgdd = rgdd_from_mols(args.k, args.q)
    gdd = rgdd_to_gdd(rgdd)
    write_design(config, DesignFile(gdd, 'GDD', gdd.k, None,
                                    ('{}-RGDD of type {} completed'.format(args.k, rgdd.gdd_type),)))
    return EXIT_OK


def cmd_construct_inflate(args: argparse.Namespace, config: RunConfig) -> int:
    """Inflate every point of a GDD by h"""
    gdd = _require_gdd(args.source)
    filler = _require_gdd(args.filler) if args.filler else None
    result = inflate(gdd, args.h, filler)
    write_design(config, DesignFile(result, 'GDD', result.k, None,
                                    ('{} inflated by {}'.format(args.source, args.h),)))
    return EXIT_OK


def parse_filler(item: str, k: int) -> Tuple[int, Design]:
    """Parse SIZE=SOURCE where SOURCE is 'degenerate', a catalog id or a design file

    Args:
        item: filler specification
        k: block size of the GDD

    Returns:
        Tuple[int, Design]

    Raises:
        ParamError: malformed specification
    """
    size, separator, source = item.partition('=')
    if not separator or not size.strip().isdigit() or not source:
        raise ParamError('Filler must be given as SIZE=SOURCE', filler=item)
    if source == 'degenerate':
        return int(size), degenerate_pent(k)
    return int(size), load_source(source).design


def cmd_construct_overlay(args: argparse.Namespace, config: RunConfig) -> int:
    """Overlay the groups of a GDD with pentagonal geometries"""
    gdd = _require_gdd(args.gdd)
    fillers = dict(parse_filler(item, gdd.k) for item in args.filler)
    design = wfc_overlay(gdd, fillers)
    r = int(design.point_degrees()[0])
    write_design(config, DesignFile(design, 'PENT', gdd.k, r,
                                    ('{} overlaid'.format(args.gdd),)))
    return EXIT_OK


def cmd_construct_mset(args: argparse.Namespace, config: RunConfig) -> int:
    """Weight sets of sums of q elements"""
    if args.family == '40':
        values, weights = m40_set(args.g, args.q), weights40(args.g)
    elif args.family == '10':
        values, weights = m10_set(args.g, args.q), weights10(args.g)
    else:
        if args.u is None:
            raise ParamError('--u is needed for family 53')
        values = m_set_53(args.g, args.u, args.q)
        weights = (args.g, args.g * (args.u - 1) // 3)
    if args.decompose is not None:
        witness = sum_decompose(args.decompose, weights, args.q)
        payload: Any = {'m': args.decompose, 'q': args.q,
                        'witness': None if witness is None else
                        {str(weight): count for weight, count in witness.items()}}
        text = ('{} is no sum of {} weights'.format(args.decompose, args.q) if witness is None
                else '{} = {}'.format(args.decompose, ' + '.join(
                    '{}*{}'.format(count, weight) for weight, count in witness.items())))
    else:
        ordered = sorted(values)
        payload = {'family': args.family, 'g': args.g, 'q': args.q, 'values': ordered}
        text = ' '.join(str(value) for value in ordered)
    write_output(config, payload, text)
    return EXIT_OK


# spectrum

def cmd_spectrum_status(args: argparse.Namespace, config: RunConfig) -> int:
    """Known existence of PENT(k, r)"""
    status = facts(args.k, args.r, args.olps)
    payload = {'k': args.k, 'r': args.r, 'olps': args.olps, **status._asdict()}
    lines = ['PENT({},{}): {}'.format(args.k, args.r, status)]
    if args.olps is None:
        no_olp = facts(args.k, args.r, 0)
        payload['no_olp'] = no_olp._asdict()
        lines.append('  without opposite line pairs: {}'.format(no_olp))
    write_output(config, payload, '\n'.join(lines))
    return EXIT_OK


def cmd_spectrum_replay(args: argparse.Namespace, config: RunConfig) -> int:
    """Replay every table"""
    frame = replay_tables(verbose=not args.quiet)
    passed = bool(frame['passed'].all())
    payload = json.loads(frame.to_json(orient='records'))
    write_output(config, payload, frame.to_string(index=False))
    return EXIT_OK if passed else EXIT_INVALID


def _accept_all(s: int) -> bool:
    return True


def cmd_spectrum_plan53(args: argparse.Namespace, config: RunConfig) -> int:
    """PENT(5, r) from TD-patched 5-GDDs"""
    oracle = _accept_all if args.accept_all else None
    values = plan_construction53(args.g, args.u, args.q, r0=args.r0, existence_oracle=oracle)
    write_output(config, {'g': args.g, 'u': args.u, 'q': args.q, 'values': values},
                 ' '.join(str(value) for value in values))
    return EXIT_OK


def cmd_spectrum_plan_jolp(args: argparse.Namespace, config: RunConfig) -> int:
    """Plan a PENT(4) with j opposite line pairs"""
    plan = plan_jolp(args.j, args.residue, t_max=args.t_max, a_max=args.a_max)
    if plan is None:
        write_output(config, None, 'no plan within the bounds')
        return EXIT_OK
    payload = dict(plan._asdict(), gdd_type=str(plan.gdd_type))
    write_output(config, payload, str(plan))
    return EXIT_OK


def cmd_spectrum_families(args: argparse.Namespace, config: RunConfig) -> int:
    """Recursive PENT(5) families of a PENT(5, r)"""
    families = pent5_families(args.r)
    payload = [dict(family._asdict(), values=family.values(args.limit)) for family in families]
    text = '\n'.join('({}) {}: {}'.format(family.part, family, ' '.join(
        str(value) for value in family.values(args.limit))) for family in families)
    write_output(config, payload, text)
    return EXIT_OK


# diffcensus

def cmd_diffcensus(args: argparse.Namespace, config: RunConfig) -> int:
    """Difference census of the PENT(3, 6m + 3) base blocks"""
    q = 6 * args.m + 5
    census = difference_census(pent3_base_blocks(args.m), pent3_deficiency_edges(args.m), q)
    payload = {'m': args.m, 'q': q,
               'differences': {str(difference): count for difference, count in census.items()}}
    text = 'q={}: {} differences, each generated once'.format(q, len(census))
    write_output(config, payload, text)
    return EXIT_OK


HANDLERS: Dict[str, Any] = {
    'catalog list': cmd_catalog_list,
    'catalog show': cmd_catalog_show,
    'catalog emit': cmd_catalog_emit,
    'verify': cmd_verify,
    'construct pent3': cmd_construct_pent3,
    'construct overlay': cmd_construct_overlay,
    'construct inflate': cmd_construct_inflate,
    'construct rgdd5': cmd_construct_rgdd5,
    'construct td': cmd_construct_td,
    'construct mset': cmd_construct_mset,
    'spectrum status': cmd_spectrum_status,
    'spectrum replay-tables': cmd_spectrum_replay,
    'spectrum plan53': cmd_spectrum_plan53,
    'spectrum plan-jolp': cmd_spectrum_plan_jolp,
    'spectrum families': cmd_spectrum_families,
    'diffcensus': cmd_diffcensus,
}
