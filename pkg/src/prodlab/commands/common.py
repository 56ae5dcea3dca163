"""Options and the run loop shared by the experiment subcommands."""

from __future__ import annotations

from collections.abc import Callable

import click

from ..core.config import load_config
from ..core.output import Output
from ..core.service import ExperimentService
from ..exceptions import ProdLabError
from ..models import ExperimentKind
from ..utils import handle_error, show_result


def distribution_options(func: Callable) -> Callable:
    """Add --family and --param to a command."""
    func = click.option(
        "--param",
        "-p",
        "params",
        type=float,
        multiple=True,
        help="Family parameter; repeat in order (e.g. -p 0 -p 1 for uniform)",
    )(func)
    func = click.option(
        "--family",
        "-f",
        type=str,
        help="exponential, uniform, lognormal or pareto_shifted",
    )(func)
    return func


def collect(**values) -> dict:
    """Drop flags that were not given; multiple-value flags become lists."""
    out = {}
    for key, value in values.items():
        if value is None or value == ():
            continue
        out[key] = list(value) if isinstance(value, tuple) else value
    return out


def execute(
    ctx: click.Context, kind: ExperimentKind | None, overrides: dict
) -> None:
    """Load the config, run the experiment and report it.

    Exits with the error's exit code (2 config, 3 runtime, 4 failed check).
    """
    verbose = ctx.obj["verbose"]
    output: Output = ctx.obj.get("output") or Output()

    try:
        merged = {**ctx.obj.get("overrides", {}), **overrides}
        config = load_config(ctx.obj.get("config"), merged, kind)
        output.verbose(
            f"{config.kind.value}: {config.spec.describe()} seed={config.seed}",
            verbose,
        )

        svc = ExperimentService(config, output)
        result = svc.run(verbose=verbose)
        output.success(
            f"{config.kind.value} run finished; outputs written to {config.out}"
        )
        show_result(result, output, verbose)
        svc.raise_for_failed_checks(result)

    except ProdLabError as e:
        handle_error(e, output)
        ctx.exit(e.exit_code)
