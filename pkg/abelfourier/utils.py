import hashlib
import logging
from datetime import datetime

import numpy as np
from ago import human


logger = logging.getLogger(__name__)


def executor_run(executor):
    """Run an executor. Top level so it can be pickled by the pool"""
    return executor.run()


def loop_logging(executors, size):
    """
    Yield finished executors logging the progress of the run.

    Args:
        executors: iterable of finished :class:`~abelfourier.executor.ChunkExecutor`
        size (int): number of executors

    """
    start_time = datetime.now()
    done = 0
    for done, executor in enumerate(executors, start=1):
        violated = sum(1 for record in executor.result if not record['ok'])
        logger.info("[%d of %d] %s: %d checks, %d violated", done, size, executor.name, len(executor.result), violated)
        yield executor
    logger.debug("%d chunks done, started %s", done, human(start_time))


def chunks(size, step):
    """Consecutive ``range`` objects of at most ``step`` items covering ``range(size)``"""
    return [range(start, min(start + step, size)) for start in range(0, size, step)]


def digest(*inputs):
    """
    Short SHA-1 digest of the inputs of a check.

    Arrays contribute their raw bytes, anything else its ``repr``.
    """
    h = hashlib.sha1()
    for value in inputs:
        if isinstance(value, np.ndarray):
            h.update(np.ascontiguousarray(value).tobytes())
        else:
            h.update(repr(value).encode())
    return h.hexdigest()[:16]
