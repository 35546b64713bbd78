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
"""Argument parsing and entry point of the pentaforge command line"""

import argparse
import logging
import os
import sys
from typing import (
    Mapping,
    Optional,
    Sequence,
)
from pentaforge.__version__ import __version__
from pentaforge.cli.commands import (
    EXIT_INVALID,
    EXIT_MISSING,
    EXIT_USAGE,
    HANDLERS,
)
from pentaforge.cli.config import (
    FORMATS,
    LOG_LEVEL_VARIABLE,
    RunConfig,
)
from pentaforge.core._exceptions import (
    CatalogNotFoundError,
    IngredientError,
    ParamError,
    ParameterRangeError,
    PentaforgeError,
    SpecError,
)

logger = logging.getLogger(__name__)


class _Parser(argparse.ArgumentParser):
    """ArgumentParser exiting with the usage exit code"""

    def error(self, message: str) -> None:  # type: ignore
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, '{}: error: {}\n'.format(self.prog, message))


def _common() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--format', choices=FORMATS, default=None,
                        help='report format (default text)')
    common.add_argument('--jobs', type=int, default=None,
                        help='worker processes (default PENTAFORGE_JOBS or 1)')
    common.add_argument('-o', '--output', default=None, help='output file')
    common.add_argument('--config', default=None, help='YAML run configuration')
    common.add_argument('-v', '--verbose', action='count', default=0,
                        help='log INFO, twice for DEBUG')
    common.add_argument('--quiet', action='store_true', help='log errors only, no progress')
    return common


def build_parser() -> argparse.ArgumentParser:
    """Build the argument parser of all subcommands

    Returns:
        argparse.ArgumentParser
    """
    common = _common()
    parser = _Parser(prog='pentaforge',
                     description='Pentagonal geometries and group divisible designs')
    parser.add_argument('--version', action='version', version=__version__)
    commands = parser.add_subparsers(dest='command', metavar='COMMAND', parser_class=_Parser)
    commands.required = True

    def leaf(group: argparse._SubParsersAction, name: str, key: str,
             help_text: str) -> argparse.ArgumentParser:
        sub = group.add_parser(name, parents=[common], help=help_text)
        sub.set_defaults(handler_key=key)
        return sub

    catalog = commands.add_parser('catalog', help='catalog of designs')
    catalog_commands = catalog.add_subparsers(dest='subcommand', metavar='SUBCOMMAND',
                                              parser_class=_Parser)
    catalog_commands.required = True
    sub = leaf(catalog_commands, 'list', 'catalog list', 'list catalog ids')
    sub.add_argument('--kind', choices=('PENT', 'GDD'), default=None)
    sub.add_argument('--k', type=int, default=None)
    sub.add_argument('--r', type=int, default=None)
    for name, help_text in (('show', 'show an entry'), ('emit', 'write the developed design')):
        sub = leaf(catalog_commands, name, 'catalog ' + name, help_text)
        sub.add_argument('id')

    sub = leaf(commands, 'verify', 'verify', 'verify design files or catalog ids')
    sub.add_argument('targets', nargs='*', help='design files or catalog ids')
    sub.add_argument('--all-catalog', action='store_true', help='verify every catalog entry')
    sub.add_argument('--k', type=int, default=None, help='block size, overrides the file')
    sub.add_argument('--r', type=int, default=None, help='replication, overrides the file')

    construct = commands.add_parser('construct', help='build designs')
    construct_commands = construct.add_subparsers(dest='subcommand', metavar='SUBCOMMAND',
                                                  parser_class=_Parser)
    construct_commands.required = True
    sub = leaf(construct_commands, 'pent3', 'construct pent3', 'PENT(3, 6m + 3)')
    sub.add_argument('--m', type=int, required=True)
    sub = leaf(construct_commands, 'overlay', 'construct overlay', 'overlay GDD groups')
    sub.add_argument('--gdd', required=True, help='GDD file or catalog id')
    sub.add_argument('--filler', action='append', required=True,
                     help='SIZE=degenerate, SIZE=FILE or SIZE=ID, repeatable')
    sub = leaf(construct_commands, 'inflate', 'construct inflate', 'inflate a GDD')
    sub.add_argument('--in', dest='source', required=True, help='GDD file or catalog id')
    sub.add_argument('--h', type=int, required=True)
    sub.add_argument('--filler', default=None, help='k-GDD of type h^k, TD(k, h) by default')
    sub = leaf(construct_commands, 'rgdd5', 'construct rgdd5',
               '(k + 1)-GDD of type q^(k + 1) from a resolvable TD')
    sub.add_argument('--q', type=int, required=True)
    sub.add_argument('--k', type=int, default=4)
    sub = leaf(construct_commands, 'td', 'construct td', 'transversal design TD(k, q)')
    sub.add_argument('--k', type=int, required=True)
    sub.add_argument('--q', type=int, required=True)
    sub = leaf(construct_commands, 'mset', 'construct mset', 'weight sets')
    sub.add_argument('--family', choices=('40', '10', '53'), required=True)
    sub.add_argument('--g', type=int, required=True)
    sub.add_argument('--q', type=int, required=True)
    sub.add_argument('--u', type=int, default=None)
    sub.add_argument('--decompose', type=int, default=None, metavar='M')

    spectrum = commands.add_parser('spectrum', help='existence spectrum')
    spectrum_commands = spectrum.add_subparsers(dest='subcommand', metavar='SUBCOMMAND',
                                                parser_class=_Parser)
    spectrum_commands.required = True
    sub = leaf(spectrum_commands, 'status', 'spectrum status', 'known status of PENT(k, r)')
    sub.add_argument('--k', type=int, required=True)
    sub.add_argument('--r', type=int, required=True)
    sub.add_argument('--olps', type=int, default=None)
    leaf(spectrum_commands, 'replay-tables', 'spectrum replay-tables', 'replay all tables')
    sub = leaf(spectrum_commands, 'plan53', 'spectrum plan53', 'TD-patched PENT(5)')
    sub.add_argument('--g', type=int, required=True)
    sub.add_argument('--u', type=int, required=True)
    sub.add_argument('--q', type=int, required=True)
    sub.add_argument('--r0', type=int, default=None)
    sub.add_argument('--accept-all', action='store_true',
                     help='assume every PENT(5, s) exists')
    sub = leaf(spectrum_commands, 'plan-jolp', 'spectrum plan-jolp',
               'PENT(4) with j opposite line pairs')
    sub.add_argument('--j', type=int, required=True)
    sub.add_argument('--residue', type=int, required=True)
    sub.add_argument('--t-max', type=int, default=100)
    sub.add_argument('--a-max', type=int, default=20000)
    sub = leaf(spectrum_commands, 'families', 'spectrum families', 'recursive PENT(5) families')
    sub.add_argument('--r', type=int, required=True)
    sub.add_argument('--limit', type=int, default=5000)

    sub = leaf(commands, 'diffcensus', 'diffcensus', 'difference census of PENT(3, 6m + 3)')
    sub.add_argument('--m', type=int, required=True)
    return parser


def configure_logging(verbose: int,
                      quiet: bool,
                      environ: Optional[Mapping[str, str]] = None) -> int:
    """Configure logging on standard error and return the level

    Args:
        verbose: number of -v flags
        quiet: log errors only
        environ: environment, os.environ by default

    Returns:
        int
    """
    environ = os.environ if environ is None else environ
    if quiet:
        level = logging.ERROR
    elif verbose >= 2:
        level = logging.DEBUG
    elif verbose == 1:
        level = logging.INFO
    else:
        level = getattr(logging, environ.get(LOG_LEVEL_VARIABLE, 'WARNING').upper(),
                        logging.WARNING)
    logging.basicConfig(stream=sys.stderr, level=level,
                        format='%(levelname)s %(name)s: %(message)s')
    logging.getLogger('pentaforge').setLevel(level)
    return level


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Run the pentaforge command line

    Args:
        argv: arguments without the program name, sys.argv[1:] by default

    Returns:
        int: 0 valid, 1 usage error, 2 invalid design, 3 missing ingredient
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exit_:
        return int(exit_.code or 0)
    configure_logging(args.verbose, args.quiet)
    try:
        config = RunConfig.resolve(args.handler_key,
                                   inputs=getattr(args, 'targets', ()),
                                   output=args.output,
                                   format=args.format,
                                   jobs=args.jobs,
                                   config_file=args.config)
        return HANDLERS[args.handler_key](args, config)
    except IngredientError as error:
        logger.error('Missing ingredient %s: %s', error.context.get('missing'), error)
        return EXIT_MISSING
    except (CatalogNotFoundError, ParamError, ParameterRangeError, SpecError, OSError) as error:
        logger.error('%s', error)
        return EXIT_USAGE
    except PentaforgeError as error:
        logger.error('%s', error)
        return EXIT_INVALID
