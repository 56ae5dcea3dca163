"""Extremal command for ProdLab CLI."""

from __future__ import annotations

import click

from ..models import ExperimentKind
from .common import collect, execute


@click.command()
@click.option(
    "--t", "t_grid", type=float, multiple=True, help="Upper limit t in (0, 1]"
)
@click.option("--cells", type=int, help="Cells of the discretized ball")
@click.pass_context
def extremal(ctx: click.Context, t_grid, cells):
    """Maximize int_0^t f(u)/u du over the Strassen ball.

    Examples:

        prodlab extremal --t 1 --cells 16384
    """
    execute(ctx, ExperimentKind.EXTREMAL, collect(t_grid=t_grid, cells=cells))
