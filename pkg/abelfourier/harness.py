"""
Contains the suite configuration and the class that runs the suites
"""

import io
import os
import logging
from datetime import datetime
from multiprocessing.pool import Pool

from abelfourier import __version__, suites
from abelfourier.errors import AbelFourierError, SuiteError
from abelfourier.executor import ChunkExecutor
from abelfourier.groups import parse_group_spec
from abelfourier.norms import Exponent
from abelfourier.report import SuiteReport, summarize
from abelfourier.utils import chunks, executor_run, loop_logging

logger = logging.getLogger(__name__)

SUITE_NAMES = list(suites.SUITES) + [suites.ALL]


class SuiteConfig:
    """
    Validated settings of a suite run.

    Args:
        suite (str): one of :data:`SUITE_NAMES`
        configuration (dict): loaded configuration (see :func:`abelfourier.config.load`)
        fixture (:class:`~abelfourier.load.Fixture`): optional fixture
        output (str): report path, None for the standard output

    Raises:
        SuiteError: unknown suite or invalid values

    """

    def __init__(self, suite, configuration, fixture=None, output=None):
        if suite not in SUITE_NAMES:
            raise SuiteError("Unknown suite '{}'".format(suite))
        self.suite = suite
        self.configuration = configuration
        self.fixture = fixture
        self.output = output

        self.seed = int(configuration['seed'])
        self.trials = int(configuration['trials'])
        self.trials_chunk = int(configuration['trials_chunk'])
        self.naive_max = int(configuration['naive_max'])
        if self.trials < 1 or self.trials_chunk < 1:
            raise SuiteError('trials and trials_chunk must be >= 1')

        self.cores = configuration['cores']
        if self.cores is None:
            self.cores = os.cpu_count()

        try:
            self.groups = [parse_group_spec(text) for text in configuration['groups']]
            self.p_grid = [Exponent.parse(str(token)) for token in configuration['grids']['p']]
        except AbelFourierError as e:
            raise SuiteError(str(e))
        if len(self.groups) == 0 or len(self.p_grid) == 0:
            raise SuiteError('Empty group list or exponent grid')

        self.t_grid = [float(t) for t in configuration['grids']['t']]
        if any(not 0 <= t <= 1 for t in self.t_grid):
            raise SuiteError('Interpolation parameters must be in [0, 1], got {}'.format(self.t_grid))

        self.tolerances = {name: float(value) for name, value in configuration['tolerances'].items()}
        for name, value in self.tolerances.items():
            if not value > 0:
                raise SuiteError("Tolerance '{}' must be positive, got {}".format(name, value))

        self.interpolation = {key: int(value) for key, value in configuration['interpolation'].items()}
        self.measures = {key: int(value) for key, value in configuration['measures'].items()}

    def settings(self):
        """Plain values handed to the executors"""
        return {
            'seed': self.seed,
            'groups': [g.orders for g in self.groups],
            'naive_max': self.naive_max,
            'tolerances': dict(self.tolerances),
            't_grid': list(self.t_grid),
            'p_grid': [p.recip for p in self.p_grid],
            'interpolation': dict(self.interpolation),
            'measures': dict(self.measures)
        }

    def echo(self):
        """Configuration as written in the report"""
        echo = self.settings()
        echo.update(suite=self.suite, trials=self.trials, version=__version__,
                    groups=[str(g) for g in self.groups],
                    p_grid=[str(p) for p in self.p_grid],
                    fixture=None if self.fixture is None else self.fixture.kind)
        return echo


class SuiteRunner(object):
    """

    Args:
       config (:class:`SuiteConfig`): suite configuration

    """

    def __init__(self, config):
        logger.debug('Using abelfourier version %s', __version__)
        self.config = config
        self.suites = list(suites.SUITES) if config.suite == suites.ALL else [config.suite]

        self.cores = config.cores
        logger.debug('Using %s cores', self.cores)
        self.avoid_parallel = self.cores == 1

        if hasattr(config.configuration, 'write'):
            s = io.BytesIO()
            config.configuration.write(s)
            logger.debug('Configuration used:\n' + s.getvalue().decode())
            s.close()

    def run(self):
        """
        Run the suites and aggregate the records.

        Returns:
            :class:`~abelfourier.report.SuiteReport`

        """
        start_time = datetime.now()
        settings = self.config.settings()
        executors = [ChunkExecutor(suite, trials, settings, self.config.fixture)
                     for suite in self.suites
                     for trials in chunks(self.config.trials, self.config.trials_chunk)]

        records = []
        logger.info('Running %s', ', '.join(self.suites))
        if self.avoid_parallel:
            for executor in loop_logging(map(executor_run, executors), size=len(executors)):
                records.extend(executor.result)
        else:
            with Pool(self.cores) as pool:
                # imap keeps the chunk order
                for executor in loop_logging(pool.imap(executor_run, executors), size=len(executors)):
                    records.extend(executor.result)

        summary = summarize(records)
        wall_time = (datetime.now() - start_time).total_seconds()
        report = SuiteReport(self.config.suite, self.config.echo(), summary, wall_time)
        if report.passed:
            logger.info('Done: %d checks, no violations', len(records))
        else:
            logger.warning('Violated checks: %s', ', '.join(report.violations))
        return report


def run_suite(config):
    """
    Run the battery of ``config.suite`` (every battery for ``all``).

    Args:
        config (:class:`SuiteConfig`): suite configuration

    Returns:
        :class:`~abelfourier.report.SuiteReport`

    """
    return SuiteRunner(config).run()
