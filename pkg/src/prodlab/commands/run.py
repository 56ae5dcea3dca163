"""Run command for ProdLab CLI."""

from __future__ import annotations

import click

from ..core.output import Output
from ..exceptions import ConfigError
from ..utils import handle_error
from .common import execute


@click.command()
@click.pass_context
def run(ctx: click.Context):
    """Run the experiment described by --config.

    The experiment kind is taken from the file's 'kind' key. A metadata.json
    written by an earlier run is accepted as a config and reruns it exactly.

    Examples:

        prodlab --config clt.toml run

        prodlab --config prodlab-out/metadata.json --out rerun run
    """
    if not ctx.obj.get("config"):
        output: Output = ctx.obj.get("output") or Output()
        error = ConfigError("'run' needs --config pointing at a file with 'kind'")
        handle_error(error, output)
        ctx.exit(error.exit_code)
    execute(ctx, None, {})
