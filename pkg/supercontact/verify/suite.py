import logging
from time import monotonic

from . import CheckResult, Report, ResourceLimitError, events
from .checks import Check, SuiteState, get_checks
from ..config import SupercontactConfig, get_config
from ..contact.context import make_context
from ..contact.hamiltonian import quadratic_dim
from ..grassmann.dims import Dims
from ..spo.basis import spo_dim

logger = logging.getLogger()


def check_resource_limits(dims: Dims, config: SupercontactConfig):
    if not config.allows(dims.l, dims.n):
        raise ResourceLimitError(dims.l, dims.n, config.max_l, config.max_n)


def run_suite(
    dims: Dims,
    seed: int = None,
    force: bool = False,
    config: SupercontactConfig = None,
) -> Report:
    """Run every registered check, in registration order, for ``dims``."""
    config = config or get_config() or SupercontactConfig()
    if not force:
        check_resource_limits(dims, config)

    state = SuiteState(
        dims=dims,
        ctx=make_context(dims),
        seed=config.seed if seed is None else seed,
        random_cases=config.random_cases,
        matrix_samples=config.matrix_samples,
    )
    logger.info(f'Running verification suite for {dims} with seed {state.seed}.')

    results = []
    for check_cls in get_checks():
        result = run_check(check_cls(state))
        events.emit(result)
        results.append(result)

    return Report(
        l=dims.l,
        n=dims.n,
        dim_spo=spo_dim(dims),
        dim_quadratic=quadratic_dim(dims),
        checks=results,
    )


def run_check(check: Check) -> CheckResult:
    started = monotonic()
    try:
        details = check.find_counterexample()
    except Exception as exc:
        logger.exception(exc)
        details = f'{type(exc).__name__}: {exc}'
    elapsed_ms = int((monotonic() - started) * 1000)

    return CheckResult(
        name=check.check_name,
        passed=not details,
        details=details or '',
        elapsed_ms=elapsed_ms,
    )
