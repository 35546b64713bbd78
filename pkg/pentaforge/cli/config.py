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
"""Run configuration of the pentaforge command line"""

import logging
import os
from typing import (
    Any,
    List,
    Mapping,
    Optional,
    Sequence,
)
import yaml
from hqsbase.qonfig import Qonfig
from pentaforge.core._exceptions import (
    ParamError,
    ParameterRangeError,
)

logger = logging.getLogger(__name__)

FORMATS = ('text', 'json')
JOBS_VARIABLE = 'PENTAFORGE_JOBS'
LOG_LEVEL_VARIABLE = 'PENTAFORGE_LOG_LEVEL'


class RunConfig(object):
    """Settings of one pentaforge invocation.

    Values come from the command line, then from a YAML file given with ``--config``, then
    from the environment (``PENTAFORGE_JOBS``) and finally from the defaults.

    """

    _qonfig_defaults_dict = {
        'command': {'doc': 'Command and subcommand, e.g. "verify" or "construct pent3"',
                    'default': ''},
        'inputs': {'doc': 'Input design files or catalog ids', 'default': list()},
        'output': {'doc': 'Output file, standard output when None', 'default': None},
        'format': {'doc': 'Report format, text or json', 'default': 'text'},
        'jobs': {'doc': 'Number of worker processes', 'default': 1},
    }
    _qonfig_never_receives_values = True

    @classmethod
    def from_qonfig(cls,
                    config: Qonfig['RunConfig']
                    ) -> 'RunConfig':
        """Create an Instance from Qonfig

        Args:
            config: Qonfig of class

        Returns:
            RunConfig
        """
        return cls(command=config['command'],
                   inputs=config['inputs'],
                   output=config['output'],
                   format=config['format'],
                   jobs=config['jobs'])

    def to_qonfig(self) -> 'Qonfig[RunConfig]':
        """Create a Qonfig from Instance

        Returns:
            Qonfig[RunConfig]
        """
        config = Qonfig(self.__class__)
        config['command'] = self.command
        config['inputs'] = list(self.inputs)
        config['output'] = self.output
        config['format'] = self.format
        config['jobs'] = self.jobs
        return config

    def __init__(self,
                 command: str = '',
                 inputs: Optional[Sequence[str]] = None,
                 output: Optional[str] = None,
                 format: str = 'text',
                 jobs: int = 1) -> None:
        """Initialize RunConfig

        Args:
            command: command and subcommand
            inputs: input design files or catalog ids
            output: output file, standard output when None
            format: text or json
            jobs: number of worker processes

        Raises:
            ParamError: unknown format
            ParameterRangeError: jobs < 1
        """
        if format not in FORMATS:
            raise ParamError('Unknown output format', format=format)
        if int(jobs) < 1:
            raise ParameterRangeError('Worker count must be at least 1', jobs=jobs)
        self.command = command
        self.inputs: List[str] = list(inputs) if inputs is not None else []
        self.output = output
        self.format = format
        self.jobs = int(jobs)

    @staticmethod
    def _read_mapping(path: str) -> dict:
        with open(os.path.expanduser(path), encoding='utf-8') as infile:
            content = yaml.safe_load(infile.read())
        if content is None:
            content = {}
        if not isinstance(content, dict):
            raise ParamError('Configuration file must hold a mapping', path=path)
        logger.debug('Loaded run configuration %s', path)
        return content

    @classmethod
    def load(cls, path: str) -> 'RunConfig':
        """Read a RunConfig from a YAML file

        The file holds the keys of the configuration; ``qonfig_name`` may be omitted.

        Args:
            path: location of the YAML file

        Returns:
            RunConfig

        Raises:
            ParamError: the file does not hold a mapping
        """
        content = cls._read_mapping(path)
        content.setdefault('qonfig_name', '{}.{}'.format(cls.__module__, cls.__name__))
        return Qonfig.from_dict(content).to_instance()

    @classmethod
    def resolve(cls,
                command: str,
                inputs: Sequence[str] = (),
                output: Optional[str] = None,
                format: Optional[str] = None,
                jobs: Optional[int] = None,
                config_file: Optional[str] = None,
                environ: Optional[Mapping[str, str]] = None) -> 'RunConfig':
        """Combine command line values, a configuration file and the environment

        Args:
            command: command and subcommand
            inputs: input design files or catalog ids
            output: output file from the command line
            format: format from the command line
            jobs: worker count from the command line
            config_file: YAML configuration file
            environ: environment, os.environ by default

        Returns:
            RunConfig

        Raises:
            ParameterRangeError: the worker count in the environment is not a positive integer
        """
        environ = os.environ if environ is None else environ
        settings: dict = {'format': 'text', 'jobs': 1, 'output': None}
        if environ.get(JOBS_VARIABLE):
            try:
                settings['jobs'] = int(environ[JOBS_VARIABLE])
            except ValueError as error:
                raise ParameterRangeError('Worker count must be an integer',
                                          jobs=environ[JOBS_VARIABLE]) from error
        if config_file is not None:
            settings.update({key: value for key, value in cls._read_mapping(config_file).items()
                             if key in settings})
        overrides: dict = {'format': format, 'jobs': jobs, 'output': output}
        settings.update({key: value for key, value in overrides.items() if value is not None})
        return cls(command=command, inputs=inputs, **settings)

    def __eq__(self, other: Any) -> bool:
        """Return True when both configurations hold the same values

        Args:
            other: object compared with

        Returns:
            bool
        """
        if not isinstance(other, RunConfig):
            return False
        return self.to_qonfig().to_dict() == other.to_qonfig().to_dict()

    def __str__(self) -> str:
        """Return string representation of the configuration

        Returns:
            str
        """
        return 'RunConfig(command={!r}, format={}, jobs={}, output={})'.format(
            self.command, self.format, self.jobs, self.output)
