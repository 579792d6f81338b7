"""
Definition of the zeromode CLI
"""
import click
from zeromode.commands import (
    toy,
    evolve,
    compare,
    gauge_probe,
    grad_check,
)


@click.group()
def zeromode():
    """
    CLI for zero-mode truncation of tensor network bonds
    """


zeromode.add_command(toy)
zeromode.add_command(evolve)
zeromode.add_command(compare)
zeromode.add_command(gauge_probe)
zeromode.add_command(grad_check)
