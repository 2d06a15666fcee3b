import functools
import logging
from pathlib import Path

import click

from . import logging as supercontact_logging
from .config import InvalidConfigError, SupercontactConfig, configure
from .contact.context import make_context
from .contact.hamiltonian import (
    contact_field,
    hamiltonian_of,
    lagrange_bracket,
    quadratic_basis,
    structure_constants,
)
from .embedding.projective import embed_spo
from .embedding.table import correspondence_table
from .grassmann import GrassmannError
from .grassmann.dims import Dims
from .grassmann.expressions import parse_expr
from .schemas import dumps
from .schemas.embedding import CorrespondenceRowSchema, StructureConstantSchema
from .schemas.spo import BasisElementSchema
from .schemas.verify import ReportSchema
from .spo import SpoError, SpoFamily
from .spo.basis import SpoBasisLabel, basis_element, spo_basis
from .verify import CheckResult, ResourceLimitError, events
from .verify.suite import check_resource_limits, run_suite


DEFAULT_CONFIG = SupercontactConfig()

logger = logging.getLogger()


class CliError(click.ClickException):
    """Usage, parse and configuration errors; exit code 2."""

    exit_code = 2


def dims_options(func):
    @click.option('-l', 'l', type=int, required=True, help='Even half-dimension.')
    @click.option('-n', 'n', type=int, required=True, help='Odd dimension.')
    @click.option(
        '--force',
        is_flag=True,
        help='Ignore the resource cap on l and n from the config.',
    )
    @click.pass_obj
    @functools.wraps(func)
    def wrapper(config, l, n, force, **kwargs):  # noqa: E741
        try:
            dims = Dims(l, n)
            if not force:
                check_resource_limits(dims, config)
            return func(dims=dims, config=config, force=force, **kwargs)
        except (GrassmannError, SpoError, ResourceLimitError) as exc:
            raise CliError(str(exc)) from exc

    return wrapper


def json_option(func):
    return click.option('--json', 'as_json', is_flag=True, help='Print JSON.')(func)


# Do not put default values for non-flag options. Otherwise other config
# sources (env and config file) will be ignored.
@click.group()
@click.option(
    '--config-path',
    type=click.Path(exists=True, dir_okay=False),
    envvar='SUPERCONTACT_CONFIG_PATH',
    help=(
        '[env:SUPERCONTACT_CONFIG_PATH] (default:$HOME/.supercontact/config.yml) '
        'Path to the config YAML file.'
    ),
)
@click.option(
    '--log-path',
    type=click.Path(dir_okay=False),
    envvar='SUPERCONTACT_LOG_PATH',
    help='[env:SUPERCONTACT_LOG_PATH] (default:None) Path to a log file.',
)
@click.option(
    '--silent',
    is_flag=True,
    default=None,
    envvar='SUPERCONTACT_SILENT',
    help=(
        f'[env:SUPERCONTACT_SILENT] (default:{DEFAULT_CONFIG.silent}) '
        'Do not log into stderr.'
    ),
)
@click.option(
    '--debug',
    is_flag=True,
    default=None,
    envvar='SUPERCONTACT_DEBUG',
    help=f'[env:SUPERCONTACT_DEBUG] (default:{DEFAULT_CONFIG.debug}) Debug logging.',
)
@click.pass_context
def cli(click_ctx, **kwargs):
    """Exact contact supergeometry of R^{2l+1|n} and the spo(2l+2|n) embedding."""
    try:
        config = configure(
            **{name: value for name, value in kwargs.items() if value is not None}
        )
    except InvalidConfigError as exc:
        raise CliError(f'Invalid config: {exc}') from exc

    supercontact_logging.configure(
        log_path=config.log_path,
        silent=config.silent,
        debug=config.debug,
    )
    click_ctx.obj = config


@cli.command()
@dims_options
@json_option
@click.option(
    '--seed',
    type=int,
    envvar='SUPERCONTACT_SEED',
    help=f'[env:SUPERCONTACT_SEED] (default:{DEFAULT_CONFIG.seed}) Random seed.',
)
@click.option(
    '--report',
    'report_path',
    type=click.Path(dir_okay=False, writable=True),
    help='Also write the JSON report to this file.',
)
def verify(dims, config, force, as_json, seed, report_path):
    """Run the full verification suite."""
    with events.subscribed(_log_check_result):
        report = run_suite(dims, seed=seed, force=force, config=config)

    payload = dumps(ReportSchema().dump(report))
    if report_path:
        Path(report_path).write_text(payload + '\n')

    if as_json:
        click.echo(payload)
    else:
        for check in report.checks:
            status = 'PASS' if check.passed else 'FAIL'
            line = f'[{status}] {check.name}'
            click.echo(f'{line}: {check.details}' if check.details else line)
        click.echo(
            f'dim spo = {report.dim_spo}, dim quadratic = {report.dim_quadratic}, '
            f'all passed: {report.all_passed}'
        )

    if not report.all_passed:
        click.get_current_context().exit(1)


@cli.command()
@dims_options
@click.argument('expr')
def xf(dims, config, force, expr):
    """Print the contact field X_f of EXPR."""
    ctx = make_context(dims)
    click.echo(str(contact_field(ctx, parse_expr(expr, dims))))


@cli.command()
@dims_options
@click.argument('f')
@click.argument('g')
def bracket(dims, config, force, f, g):
    """Print the Lagrange bracket {F, G}."""
    ctx = make_context(dims)
    click.echo(str(lagrange_bracket(ctx, parse_expr(f, dims), parse_expr(g, dims))))


@cli.command()
@dims_options
@click.argument('expr')
def parse(dims, config, force, expr):
    """Print EXPR in canonical form."""
    click.echo(str(parse_expr(expr, dims)))


@cli.command()
@dims_options
@json_option
def basis(dims, config, force, as_json):
    """Dump the spo(2l+2|n) basis."""
    elements = [
        {'label': label, 'matrix': matrix} for label, matrix in spo_basis(dims)
    ]
    if as_json:
        click.echo(dumps(BasisElementSchema(many=True).dump(elements)))
        return

    for element in elements:
        click.echo(str(element['label']))
        for row in element['matrix'].entries:
            click.echo('  ' + ' '.join(str(value) for value in row))


@cli.command()
@dims_options
@json_option
@click.argument('family', type=click.Choice([family.value for family in SpoFamily]))
@click.argument('i', type=int)
@click.argument('j', type=int)
def embed(dims, config, force, as_json, family, i, j):
    """Embed one spo basis element: field and Hamiltonian."""
    ctx = make_context(dims)
    label = SpoBasisLabel(SpoFamily(family), i, j)
    field = embed_spo(ctx, basis_element(dims, label))
    row = {'label': label, 'field': field, 'hamiltonian': hamiltonian_of(ctx, field)}
    if as_json:
        click.echo(dumps(CorrespondenceRowSchema().dump(row)))
    else:
        click.echo(f'field: {field}')
        click.echo(f'hamiltonian: {row["hamiltonian"]}')


@cli.command()
@dims_options
@json_option
def table(dims, config, force, as_json):
    """Print the spo -> contact field correspondence table."""
    rows = correspondence_table(make_context(dims), dims)
    if as_json:
        click.echo(dumps(CorrespondenceRowSchema(many=True).dump(rows)))
        return

    for row in rows:
        click.echo(f'{row.label}: H = {row.hamiltonian}; X = {row.field}')


@cli.command()
@dims_options
@json_option
def constants(dims, config, force, as_json):
    """Print the structure constants of the degree <= 2 bracket algebra."""
    basis_functions = quadratic_basis(dims)
    entries = [
        {
            'left': str(basis_functions[a]),
            'right': str(basis_functions[b]),
            'terms': [
                {'monomial': str(basis_functions[k]), 'coefficient': coeff}
                for k, coeff in sorted(terms.items())
            ],
        }
        for (a, b), terms in sorted(structure_constants(make_context(dims)).items())
    ]
    if as_json:
        click.echo(dumps(StructureConstantSchema(many=True).dump(entries)))
        return

    for entry in entries:
        value = ' + '.join(
            f'({term["coefficient"]})*{term["monomial"]}' for term in entry['terms']
        )
        click.echo(f'{{{entry["left"]}, {entry["right"]}}} = {value}')


def _log_check_result(result: CheckResult):
    if result.passed:
        logger.info(f'Check {result.name} passed in {result.elapsed_ms} ms.')
    else:
        logger.warning(f'Check {result.name} failed: {result.details}')
