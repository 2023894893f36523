import logging

import numpy as np

from abelfourier import suites


logger = logging.getLogger(__name__)


class ChunkExecutor:
    """
    Executors that run the battery of one suite over a chunk of trials.

    Every trial draws from its own generator, seeded with
    ``(seed, suite, trial)``, so the records of a trial do not depend
    on the chunk it falls in nor on the worker that runs it.

    Args:
        suite (str): suite name
        trials (range): trial indices of the chunk
        settings (dict): plain configuration values (see :meth:`~abelfourier.harness.SuiteConfig.settings`)
        fixture (:class:`~abelfourier.load.Fixture`): optional fixture

    """

    def __init__(self, suite, trials, settings, fixture=None):
        # Input attributes
        self.name = '{}[{}:{}]'.format(suite, trials.start, trials.stop)
        self.suite = suite
        self.trials = trials
        self.settings = settings
        self.fixture = fixture

        # Output attributes
        self.result = []

    def run(self):
        battery = suites.SUITES[self.suite]
        suite_id = suites.suite_id(self.suite)
        for trial in self.trials:
            rng = np.random.default_rng([self.settings['seed'], suite_id, trial])
            context = suites.Context(self.settings, trial, self.fixture)
            for position, check in enumerate(battery(context, rng)):
                record = check.to_dict()
                record.update(suite=self.suite, trial=trial, position=position)
                self.result.append(record)
                if not check.ok:
                    logger.warning('%s trial %d: %s violated by %.3e', self.suite, trial, check.name, -check.margin)
                else:
                    logger.debug('%s trial %d: %s margin %.3e', self.suite, trial, check.name, check.margin)
        return self
