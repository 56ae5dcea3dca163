"""CLT command for ProdLab CLI."""

from __future__ import annotations

import click

from ..models import ExperimentKind
from .common import collect, distribution_options, execute


@click.command()
@distribution_options
@click.option("-n", "n", type=int, help="Path length n")
@click.option("-R", "--replications", "R", type=int, help="Number of replications")
@click.option(
    "--generator",
    type=click.Choice(["iid", "coupled"]),
    help="i.i.d. paths, or paths coupled to a simulated Wiener process",
)
@click.pass_context
def clt(ctx: click.Context, family, params, n, R, generator):
    """Replicate the log statistic and compare it with Normal(0, 2).

    Examples:

        prodlab --seed 42 clt -f exponential -p 1 -n 2000 -R 5000

        prodlab clt --generator coupled -n 1000 -R 200
    """
    execute(
        ctx,
        ExperimentKind.CLT,
        collect(family=family, params=params, n=n, R=R, generator=generator),
    )
