"""FCLT command for ProdLab CLI."""

from __future__ import annotations

import click

from ..models import ExperimentKind
from .common import collect, distribution_options, execute


@click.command()
@distribution_options
@click.option("-n", "n", type=int, help="Path length n")
@click.option("-R", "--replications", "R", type=int, help="Number of replications")
@click.option(
    "--t", "t_grid", type=float, multiple=True, help="Evaluation time in [0, 1]"
)
@click.pass_context
def fclt(ctx: click.Context, family, params, n, R, t_grid):
    """Compare the log-product path with its Gaussian limit process.

    Marginals at every --t are tested against Normal(0, 2t); the empirical
    covariance is written next to the limit covariance.

    Examples:

        prodlab fclt -n 2000 -R 2000 --t 0.25 --t 0.5 --t 1
    """
    execute(
        ctx,
        ExperimentKind.FCLT,
        collect(family=family, params=params, n=n, R=R, t_grid=t_grid),
    )
