"""Init command for ProdLab CLI."""

from __future__ import annotations

from pathlib import Path

import click

from ..core.config import load_config, save_config
from ..core.output import Output
from ..exceptions import ProdLabError
from ..models import ExperimentKind
from ..utils import handle_error


@click.command()
@click.argument("path", type=click.Path(dir_okay=False))
@click.option(
    "--kind",
    "-k",
    type=click.Choice([k.value for k in ExperimentKind]),
    default=ExperimentKind.CLT.value,
    show_default=True,
    help="Experiment kind of the new config",
)
@click.option("--force", is_flag=True, help="Overwrite an existing file")
@click.pass_context
def init(ctx: click.Context, path: str, kind: str, force: bool):
    """Write a config file with every key at its default value.

    The seed is fixed in the file, so runs from it are reproducible.

    Examples:

        prodlab init clt.toml

        prodlab --seed 42 init fclt.json --kind fclt
    """
    output: Output = ctx.obj.get("output") or Output()
    target = Path(path)
    if target.exists() and not force:
        output.warning(f"'{target}' already exists")
        output.print("Use --force to overwrite it")
        return

    try:
        config = load_config(None, ctx.obj.get("overrides"), kind)
        save_config(config, target)
        output.success(f"Wrote {kind} config to {target}")
    except ProdLabError as e:
        handle_error(e, output)
        ctx.exit(e.exit_code)
