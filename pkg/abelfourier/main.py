"""
Contains the command line parsing
"""

import sys

import click
import bglogs

from abelfourier import __version__, config, load
from abelfourier.errors import AbelFourierError
from abelfourier.groups import parse_group_spec
from abelfourier.harness import SUITE_NAMES, SuiteConfig, run_suite
from abelfourier.norms import Exponent
from abelfourier.report import emit_report


CONTEXT_SETTINGS = dict(help_option_names=['-h', '--help'])

TOLERANCES = ('single', 'aggregate', 'interpolation')


def main(suite, config_file, config_override_dict=None, fixture_file=None, output_file=None):
    """
    Run a suite and write its report.

    Returns:
        :class:`~abelfourier.report.SuiteReport`

    Raises:
        click.UsageError: invalid configuration, fixture or output path, or a
            suite aborted by an :class:`~abelfourier.errors.AbelFourierError`

    """
    configuration = config.load(config_file, override=config_override_dict)

    try:
        fixture = None if fixture_file is None else load.load_fixture(fixture_file)
        suite_config = SuiteConfig(suite, configuration, fixture=fixture, output=output_file)
    except AbelFourierError as e:
        raise click.UsageError(str(e))

    bglogs.info('Running suite {}'.format(suite))
    try:
        report = run_suite(suite_config)
    except AbelFourierError as e:
        # raised by fixture data the checks cannot handle (overflow, no convergence)
        raise click.UsageError('Suite {} aborted: {}'.format(suite, e))

    try:
        emit_report(report, output_file)
    except OSError as e:
        raise click.UsageError('Cannot write the report: {}'.format(e))
    return report


def _split(value):
    return [token.strip() for token in value.split(',') if token.strip() != '']


def parse_orders(ctx, param, values):
    try:
        return [str(parse_group_spec(value)) for value in values]
    except AbelFourierError as e:
        raise click.BadParameter(str(e))


def parse_t_grid(ctx, param, value):
    if value is None:
        return None
    try:
        grid = [float(token) for token in _split(value)]
    except ValueError as e:
        raise click.BadParameter(str(e))
    if len(grid) == 0 or any(not 0 <= t <= 1 for t in grid):
        raise click.BadParameter('values must be in [0, 1], got {}'.format(value))
    return grid


def parse_p_grid(ctx, param, value):
    if value is None:
        return None
    tokens = _split(value)
    try:
        for token in tokens:
            Exponent.parse(token)
    except AbelFourierError as e:
        raise click.BadParameter(str(e))
    if len(tokens) == 0:
        raise click.BadParameter('empty exponent grid')
    return tokens


def parse_tolerances(ctx, param, values):
    tolerances = {}
    for value in values:
        name, _, number = value.partition('=')
        name = name.strip()
        if name not in TOLERANCES:
            raise click.BadParameter("unknown tolerance '{}', use one of {}".format(name, ', '.join(TOLERANCES)))
        try:
            tolerances[name] = float(number)
        except ValueError:
            raise click.BadParameter("'{}' is not a number".format(number))
        if not tolerances[name] > 0:
            raise click.BadParameter('tolerances must be positive')
    return tolerances


@click.command(context_settings=CONTEXT_SETTINGS)
@click.option('-s', '--suite', type=click.Choice(SUITE_NAMES), default='all', help='Invariant battery to run. Default to all')
@click.option('-g', '--orders', multiple=True, metavar='GROUP', callback=parse_orders, help="Group as '4,2,3' or 'Z4xZ2xZ3'. Repeat it for several groups")
@click.option('-n', '--trials', type=click.IntRange(1, None), default=None, help='Random trials per suite')
@click.option('--seed', help="Set up an initial random seed to have reproducible results", type=click.IntRange(0, 2**32-1), default=None)
@click.option('--tol', 'tolerances', multiple=True, metavar='NAME=VALUE', callback=parse_tolerances, help='Override a tolerance (single, aggregate or interpolation)')
@click.option('--t-grid', 't_grid', metavar='T1,T2,...', callback=parse_t_grid, help='Interpolation parameters in [0, 1]')
@click.option('--p-grid', 'p_grid', metavar='P1,P2,...', callback=parse_p_grid, help="Exponents: '0.75' or '3/4' give 1/p, 'p=4/3' or 'p=inf' give p")
@click.option('--json', 'output_file', type=click.Path(dir_okay=False, writable=True), metavar='REPORT', help='Report file. Default to the standard output', default=None)
@click.option('--fixture', 'fixture_file', type=click.Path(exists=True, dir_okay=False), metavar='FIXTURE', help='Function, matrix or measure JSON to check besides the random inputs', default=None)
@click.option('-c', '--configuration', 'config_file', default=None, type=click.Path(exists=True), metavar='CONFIG_FILE', help="Configuration file. Default to 'abelfourier.conf' in the current folder if exists or to ~/.config/bbglab/abelfourier.conf if not.")
@click.option('--cores', type=click.IntRange(1, None), default=None, help='Worker processes')
@click.option('--debug', help="Show more progress details", is_flag=True)
@click.version_option(version=__version__)
def cmdline(suite, orders, trials, seed, tolerances, t_grid, p_grid, output_file, fixture_file, config_file, cores, debug):
    """
    Run the invariant batteries of SUITE and write a JSON report.

    Exit code 0 when every check passes, 1 when some check is violated
    and 2 on usage errors.
    """
    bglogs.configure(debug=True if debug else False)

    override_config = {}
    if cores is not None:
        override_config['cores'] = cores
    if seed is not None:
        override_config['seed'] = seed
    if trials is not None:
        override_config['trials'] = trials
    if len(orders) > 0:
        override_config['groups'] = list(orders)
    if len(tolerances) > 0:
        override_config['tolerances'] = tolerances
    grids = {}
    if t_grid is not None:
        grids['t'] = t_grid
    if p_grid is not None:
        grids['p'] = p_grid
    if len(grids) > 0:
        override_config['grids'] = grids

    report = main(suite, config_file, override_config, fixture_file, output_file)
    sys.exit(0 if report.passed else 1)


if __name__ == "__main__":
    cmdline()
