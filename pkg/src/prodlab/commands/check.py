"""Check command for ProdLab CLI."""

from __future__ import annotations

import click

from ..models import ExperimentKind
from .common import execute


@click.command()
@click.pass_context
def check(ctx: click.Context):
    """Run the built-in suite of analytic identities.

    Exits with code 4 when any identity is off by more than its tolerance.
    """
    execute(ctx, ExperimentKind.CHECK, {})
