"""
Suite reports and their canonical JSON form.

Reports are written with sorted keys, no whitespace and every float
with 17 significant digits, so two runs with the same configuration
produce the same bytes apart from the ``wall_time`` field.
"""

import json
import math
import logging

import click
import numpy as np
import pandas as pd


logger = logging.getLogger(__name__)

RECORD_FIELDS = ['suite', 'name', 'trial', 'position', 'lhs', 'rhs', 'excess', 'margin', 'ok', 'witness']


class SuiteReport:
    """
    Outcome of a suite run.

    Args:
        suite (str): suite name, ``all`` included
        config (dict): echo of the configuration used
        records (list): one summary per check name, see :func:`summarize`
        wall_time (float): seconds

    """

    def __init__(self, suite, config, records, wall_time):
        self.suite = suite
        self.config = config
        self.records = records
        self.wall_time = wall_time

    @property
    def violations(self):
        """Names of the checks with at least one violation"""
        return ['{}/{}'.format(r['suite'], r['name']) for r in self.records if r['violations'] > 0]

    @property
    def passed(self):
        return len(self.violations) == 0

    def to_dict(self):
        return {
            'suite': self.suite,
            'config': self.config,
            'records': self.records,
            'violations': self.violations,
            'pass': self.passed,
            'wall_time': self.wall_time
        }


def summarize(records):
    """
    Aggregate per trial check records into one row per check.

    Args:
        records (list): dicts with the keys of :data:`RECORD_FIELDS`

    Returns:
        list: dicts sorted by suite and check name with the number of
        evaluations and violations, the worst margin, the largest excess
        and the trial and witness digest of the worst evaluation

    """
    if len(records) == 0:
        return []
    df = pd.DataFrame.from_records(records, columns=RECORD_FIELDS)
    # a NaN comparison is a violation, sort it first
    df['margin'] = df['margin'].fillna(-np.inf)
    df['ok'] = df['ok'].astype(bool)

    counts = df.groupby(['suite', 'name'], sort=True).agg(
        checks=('ok', 'size'),
        violations=('ok', lambda ok: int((~ok).sum())),
        max_excess=('excess', 'max'))

    worst = df.sort_values(['suite', 'name', 'margin', 'trial', 'position'], kind='mergesort')
    worst = worst.drop_duplicates(['suite', 'name'], keep='first').set_index(['suite', 'name'])

    table = counts.join(worst[['margin', 'trial', 'witness']])
    summary = []
    for (suite, name), row in table.iterrows():
        summary.append({
            'suite': suite,
            'name': name,
            'checks': int(row['checks']),
            'violations': int(row['violations']),
            'worst_margin': float(row['margin']),
            'max_excess': float(row['max_excess']),
            'worst_trial': int(row['trial']),
            'witness': row['witness'] if isinstance(row['witness'], str) else None
        })
    return summary


def _encode(value):
    if isinstance(value, dict):
        items = sorted((str(k), v) for k, v in value.items())
        return '{' + ','.join('{}:{}'.format(json.dumps(k), _encode(v)) for k, v in items) + '}'
    if isinstance(value, (list, tuple)):
        return '[' + ','.join(_encode(v) for v in value) + ']'
    if value is None or isinstance(value, (bool, np.bool_)):
        return json.dumps(None if value is None else bool(value))
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        value = float(value)
        if math.isfinite(value):
            return format(value, '.17g')
        # JSON has no infinities
        return json.dumps(str(value))
    if isinstance(value, str):
        return json.dumps(value)
    raise TypeError('Cannot encode {!r}'.format(value))


def canonical_json(value):
    """Sorted keys, compact separators and 17 significant digit floats"""
    return _encode(value)


def emit_report(report, path=None):
    """
    Write the report as canonical JSON.

    Args:
        report (:class:`SuiteReport`): report
        path (str): output file. None or ``-`` for the standard output

    Raises:
        OSError: the file cannot be written

    """
    text = canonical_json(report.to_dict())
    if path is None or path == '-':
        click.echo(text)
        return
    with open(path, 'wt') as fd:
        fd.write(text)
        fd.write('\n')
    logger.info('Report written to %s', path)
