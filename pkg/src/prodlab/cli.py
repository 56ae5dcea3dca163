"""Main CLI interface for ProdLab."""

from __future__ import annotations

import click
import colorama

from . import __version__
from .core.output import Output

# Initialize colorama for cross-platform colored output
colorama.init()


@click.group()
@click.option("--verbose", "-v", is_flag=True, help="Enable verbose output")
@click.option(
    "--config", "-c", type=click.Path(), help="Path to a TOML or JSON config file"
)
@click.option(
    "--seed",
    type=click.IntRange(0, 2**64 - 1),
    help="Master seed (drawn from OS entropy when omitted)",
)
@click.option("--out", "-o", type=click.Path(), help="Output directory")
@click.option(
    "--workers",
    "-w",
    type=click.IntRange(min=1),
    help="Worker threads for replications",
)
@click.option(
    "--retain-samples/--no-retain-samples",
    default=None,
    help="Write per-replication samples to CSV",
)
@click.version_option(version=__version__, prog_name="ProdLab")
@click.pass_context
def main(
    ctx: click.Context,
    verbose: bool,
    config: str | None,
    seed: int | None,
    out: str | None,
    workers: int | None,
    retain_samples: bool | None,
):
    """ProdLab - simulation lab for products of sums of positive variates.

    Runs reproducible Monte Carlo experiments on the log of
    prod_k S_k/(k mu), scaled by gamma/sqrt(n), and checks them against
    their Gaussian and Strassen-type limits.
    """
    ctx.ensure_object(dict)

    ctx.obj["verbose"] = verbose
    ctx.obj["config"] = config
    ctx.obj["output"] = Output()
    # flags > file > defaults; None means "not given"
    ctx.obj["overrides"] = {
        "seed": seed,
        "out": out,
        "workers": workers,
        "retain_samples": retain_samples,
    }


# Import and register command modules
from .commands import check, clt, extremal, fclt, init, lil, run  # noqa: E402

main.add_command(run.run)
main.add_command(clt.clt)
main.add_command(fclt.fclt)
main.add_command(lil.lil)
main.add_command(extremal.extremal)
main.add_command(check.check)
main.add_command(init.init)


if __name__ == "__main__":
    main()
