"""
It helds the parameters and the
default values used by the run
configuration and by the numerical
routines
"""
from enum import Enum, unique
import aenum


@unique
class RunParams(Enum):
    """
    Keys that can be passed in a
    configuration file. They mirror
    the command line flags.
    """

    bond_dim = "D"
    loop_dim = "d"
    kappa = "kappa"
    dbeta = "dbeta"
    beta_max = "beta-max"
    g = "g"
    noise = "noise"
    seed = "seed"
    method = "method"
    out_path = "out"
    snapshot_every = "snapshot-every"
    phys_dim = "phys-dim"
    f_tol = "f-tol"
    trials = "trials"
    instances = "instances"

    def __str__(self):
        return str(self.name)

    @staticmethod
    def to_list():
        """
        Return a list with the keys accepted
        in a configuration file
        """
        return list(map(lambda element: element.value, RunParams))

    @staticmethod
    def to_dict():
        """
        Returns a dictionary from flag name
        to field name
        """
        keys = map(lambda element: element.value, RunParams)
        values = map(lambda element: element.__str__(), RunParams)
        return dict(zip(keys, values))


class RunDefaultParams(aenum.Enum, settings=aenum.NoAlias):
    """
    Default values of a run configuration
    """

    bond_dim = 4
    loop_dim = 2
    kappa = 5
    dbeta = 0.01
    beta_max = 0.5
    g = 3.04438
    noise = 0.0
    seed = 20240101
    method = "zmt"
    out_path = None
    snapshot_every = 0
    phys_dim = 2
    f_tol = 1e-10
    trials = 5
    instances = 20

    def __str__(self):
        return str(self.name)

    @staticmethod
    def to_list():
        """
        Return a list with default parameters
        """
        return list(map(lambda element: element.value, RunDefaultParams))

    @staticmethod
    def to_dict():
        """
        Returns a dictionary with the default parameters
        """
        values = map(lambda element: element.value, RunDefaultParams)
        keys = map(lambda element: element.__str__(), RunDefaultParams)
        return dict(zip(keys, values))


class ZmtDefaultParams(aenum.Enum, settings=aenum.NoAlias):
    """
    Default params for the zero-mode optimizer
    """

    regularization = 1e-12
    kappa = 5
    max_iterations = 200
    armijo = 1e-4
    shrink = 0.5
    max_backtracks = 40
    gradient_tolerance = 1e-10
    discard_tolerance = 1e-8

    def __str__(self):
        return str(self.name)

    @staticmethod
    def to_list():
        """
        Return a list with default parameters
        """
        return list(map(lambda element: element.value, ZmtDefaultParams))

    @staticmethod
    def to_dict():
        """
        Returns a dictionary with the default parameters
        """
        values = map(lambda element: element.value, ZmtDefaultParams)
        keys = map(lambda element: element.__str__(), ZmtDefaultParams)
        return dict(zip(keys, values))


class AlsDefaultParams(aenum.Enum, settings=aenum.NoAlias):
    """
    Default params for the alternating
    least squares post optimization
    """

    sweeps = 2
    improvement = 1e-8
    pinv_cutoff = 1e-12

    def __str__(self):
        return str(self.name)

    @staticmethod
    def to_list():
        """
        Return a list with default parameters
        """
        return list(map(lambda element: element.value, AlsDefaultParams))

    @staticmethod
    def to_dict():
        """
        Returns a dictionary with the default parameters
        """
        values = map(lambda element: element.value, AlsDefaultParams)
        keys = map(lambda element: element.__str__(), AlsDefaultParams)
        return dict(zip(keys, values))
