"""
Default cli messages
"""
import click
import pandas as pd
from pyfiglet import Figlet


def welcome_message(text: str) -> None:
    """
    Print welcome message
    """
    renderizer = Figlet()
    click.echo(renderizer.renderText(text))


def end_message() -> None:
    """
    Print end message
    """
    renderizer = Figlet()
    click.echo(renderizer.renderText("END"))


def echo_table(values: dict, columns=("parameter", "value")) -> None:
    """
    Print a dictionary as a markdown table
    """
    table = pd.DataFrame(list(values.items()), columns=list(columns))
    click.echo(table.to_markdown(index=False))
    click.echo("")
