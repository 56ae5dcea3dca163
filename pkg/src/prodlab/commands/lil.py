"""LIL command for ProdLab CLI."""

from __future__ import annotations

import click

from ..models import ExperimentKind
from .common import collect, distribution_options, execute


@click.command()
@distribution_options
@click.option("-n", "n", type=int, help="Final path length")
@click.option("--n0", type=int, help="First checkpoint (n0 ≥ 3)")
@click.option("--rho", type=float, help="Checkpoint growth factor (rho > 1)")
@click.option("-m", "m", type=int, help="Grid cells of the scaled path")
@click.option(
    "--ridge",
    type=click.FloatRange(min=0.0),
    help="Tikhonov weight of the limit-set score (default 1e-2)",
)
@click.pass_context
def lil(ctx: click.Context, family, params, n, n0, rho, m, ridge):
    """Follow one path to large n under the iterated-logarithm scaling.

    Writes the checkpoint trajectory with its running maximum and the
    Strassen-scaled path at the final n, and scores that path against the
    limit set.

    Examples:

        prodlab --seed 7 lil -n 1000000 --n0 1000 --rho 1.2
    """
    execute(
        ctx,
        ExperimentKind.LIL,
        collect(
            family=family, params=params, n=n, n0=n0, rho=rho, m=m, ridge=ridge
        ),
    )
