"""
Commands that can be
recorded in a run configuration
"""
from enum import Enum, unique


@unique
class RunCommand(Enum):
    """
    Enum type for the commands of the CLI
    """

    toy = "toy"
    evolve = "evolve"
    compare = "compare"
    gauge_probe = "gauge-probe"
    grad_check = "grad-check"

    def __str__(self):
        return str(self.name)

    @staticmethod
    def to_list():
        """
        Generate list of available commands
        """
        return list(map(lambda element: element.value, RunCommand))
