"""
Run configuration shared by every command
"""
import os
import yaml
from loguru import logger
from zeromode.data import (RunCommand, RunDefaultParams, RunParams,
                           TruncationMethod)
from zeromode.exceptions import ConfigurationError

OUTPUT_DIR_VARIABLE = "ZEROMODE_OUTPUT_DIR"


def _positive_integer(value, flag: str) -> int:
    try:
        number = int(value)
    except (TypeError, ValueError):
        raise ConfigurationError(
            "--{} must be an integer, got {}".format(flag, value), flag)
    if number != value or number < 1:
        raise ConfigurationError(
            "--{} must be a positive integer, got {}".format(flag, value),
            flag)
    return number


def _real(value, flag: str) -> float:
    try:
        number = float(value)
    except (TypeError, ValueError):
        raise ConfigurationError(
            "--{} must be a real number, got {}".format(flag, value), flag)
    if number != number or number in (float("inf"), float("-inf")):
        raise ConfigurationError("--{} must be finite".format(flag), flag)
    return number


class RunConfig():
    """
    Fully resolved parameters of a run
    """
    def __init__(self, command: str, bond_dim: int, loop_dim: int,
                 kappa: int, dbeta: float, beta_max: float, g: float,
                 noise: float, seed: int, method: str, out_path: str,
                 snapshot_every: int, phys_dim: int, f_tol: float,
                 trials: int, instances: int):
        """
        Constructs the configuration, validating every field
        """
        self.command = command
        self.bond_dim = bond_dim
        self.loop_dim = loop_dim
        self.kappa = kappa
        self.dbeta = dbeta
        self.beta_max = beta_max
        self.g = g
        self.noise = noise
        self.seed = seed
        self.method = method
        self.out_path = out_path
        self.snapshot_every = snapshot_every
        self.phys_dim = phys_dim
        self.f_tol = f_tol
        self.trials = trials
        self.instances = instances
        self._check_beta_grid()

    @property
    def command(self) -> str:
        """
        Returns:
            Name of the command being run
        """
        return self._command

    @command.setter
    def command(self, name: str) -> None:
        if name not in RunCommand.to_list():
            raise ConfigurationError("Unknown command {}".format(name))
        self._command = name

    @property
    def bond_dim(self) -> int:
        """
        Returns:
            Bond dimension D
        """
        return self._bond_dim

    @bond_dim.setter
    def bond_dim(self, value: int) -> None:
        self._bond_dim = _positive_integer(value, RunParams.bond_dim.value)

    @property
    def loop_dim(self) -> int:
        """
        Returns:
            Length d of the virtual loop of the toy plaquette
        """
        return self._loop_dim

    @loop_dim.setter
    def loop_dim(self, value: int) -> None:
        self._loop_dim = _positive_integer(value, RunParams.loop_dim.value)

    @property
    def kappa(self) -> int:
        """
        Returns:
            Number of metric modes, always odd
        """
        return self._kappa

    @kappa.setter
    def kappa(self, value: int) -> None:
        """
        An even value is rounded up to the next odd one
        """
        kappa = _positive_integer(value, RunParams.kappa.value)
        if kappa % 2 == 0:
            logger.warning("kappa={} is even, using kappa={}".format(
                kappa, kappa + 1))
            kappa += 1
        self._kappa = kappa

    @property
    def dbeta(self) -> float:
        """
        Returns:
            Trotter step
        """
        return self._dbeta

    @dbeta.setter
    def dbeta(self, value: float) -> None:
        dbeta = _real(value, RunParams.dbeta.value)
        if dbeta <= 0:
            raise ConfigurationError(
                "--dbeta must be positive, got {}".format(value),
                RunParams.dbeta.value)
        self._dbeta = dbeta

    @property
    def beta_max(self) -> float:
        """
        Returns:
            Final inverse temperature
        """
        return self._beta_max

    @beta_max.setter
    def beta_max(self, value: float) -> None:
        beta_max = _real(value, RunParams.beta_max.value)
        if beta_max <= 0:
            raise ConfigurationError(
                "--beta-max must be positive, got {}".format(value),
                RunParams.beta_max.value)
        self._beta_max = beta_max

    @property
    def g(self) -> float:
        """
        Returns:
            Magnetic coupling
        """
        return self._g

    @g.setter
    def g(self, value: float) -> None:
        self._g = _real(value, RunParams.g.value)

    @property
    def noise(self) -> float:
        """
        Returns:
            Noise amplitude of the toy plaquette
        """
        return self._noise

    @noise.setter
    def noise(self, value: float) -> None:
        noise = _real(value, RunParams.noise.value)
        if noise < 0:
            raise ConfigurationError(
                "--noise must be non negative, got {}".format(value),
                RunParams.noise.value)
        self._noise = noise

    @property
    def seed(self) -> int:
        """
        Returns:
            64 bit seed of the random generator
        """
        return self._seed

    @seed.setter
    def seed(self, value: int) -> None:
        try:
            seed = int(value)
        except (TypeError, ValueError):
            seed = -1
        if seed != value or not 0 <= seed < 2**64:
            raise ConfigurationError(
                "--seed must be a 64 bit unsigned integer, got {}".format(
                    value), RunParams.seed.value)
        self._seed = seed

    @property
    def method(self) -> str:
        """
        Returns:
            Truncation method
        """
        return self._method

    @method.setter
    def method(self, name: str) -> None:
        if name not in TruncationMethod.to_list():
            raise ConfigurationError(
                "--method must be one of {}, got {}".format(
                    TruncationMethod.to_list(), name),
                RunParams.method.value)
        self._method = name

    @property
    def out_path(self) -> str:
        """
        Returns:
            Output folder
        """
        return self._out_path

    @out_path.setter
    def out_path(self, path: str) -> None:
        """
        Without a value, the folder comes from ZEROMODE_OUTPUT_DIR
        or is the current folder
        """
        if path is None:
            path = os.environ.get(OUTPUT_DIR_VARIABLE, ".")
        self._out_path = str(path)

    @property
    def snapshot_every(self) -> int:
        """
        Returns:
            Steps between two snapshots, 0 disables them
        """
        return self._snapshot_every

    @snapshot_every.setter
    def snapshot_every(self, value: int) -> None:
        if value == 0:
            self._snapshot_every = 0
            return
        self._snapshot_every = _positive_integer(
            value, RunParams.snapshot_every.value)

    @property
    def phys_dim(self) -> int:
        """
        Returns:
            Physical dimension of the toy plaquette sites
        """
        return self._phys_dim

    @phys_dim.setter
    def phys_dim(self, value: int) -> None:
        self._phys_dim = _positive_integer(value, RunParams.phys_dim.value)

    @property
    def f_tol(self) -> float:
        """
        Returns:
            Largest relative error accepted by iterative reduction
        """
        return self._f_tol

    @f_tol.setter
    def f_tol(self, value: float) -> None:
        f_tol = _real(value, RunParams.f_tol.value)
        if f_tol < 0:
            raise ConfigurationError("--f-tol must be non negative",
                                     RunParams.f_tol.value)
        self._f_tol = f_tol

    @property
    def trials(self) -> int:
        """
        Returns:
            Number of random gauges of gauge-probe
        """
        return self._trials

    @trials.setter
    def trials(self, value: int) -> None:
        self._trials = _positive_integer(value, RunParams.trials.value)

    @property
    def instances(self) -> int:
        """
        Returns:
            Number of random instances of grad-check
        """
        return self._instances

    @instances.setter
    def instances(self, value: int) -> None:
        self._instances = _positive_integer(value, RunParams.instances.value)

    def _check_beta_grid(self) -> None:
        steps = round(self.beta_max / self.dbeta)
        if steps < 1 or abs(steps * self.dbeta -
                            self.beta_max) > 1e-9 * self.beta_max:
            raise ConfigurationError(
                "--beta-max={} is not a multiple of --dbeta={}".format(
                    self.beta_max, self.dbeta), RunParams.beta_max.value)

    def to_dict(self) -> dict:
        """
        Configuration keyed by flag name
        """
        values = {"command": self.command}
        for flag, field in RunParams.to_dict().items():
            values[flag] = getattr(self, field)
        return values

    @staticmethod
    def from_file(filename: str) -> dict:
        """
        Read a YAML configuration file whose keys are flag names.

            Args:
                filename (str): path of the file

            Returns:
                values (dict): values keyed by field name
        """
        with open(filename, "r") as file:
            parsed_input = yaml.load(file, Loader=yaml.SafeLoader)
        if parsed_input is None:
            return {}
        if not isinstance(parsed_input, dict):
            raise ConfigurationError(
                "{} must contain key: value pairs".format(filename), "config")
        fields = RunParams.to_dict()
        values = {}
        for key, value in parsed_input.items():
            if str(key) not in fields:
                raise ConfigurationError(
                    "param {} is not defined".format(key), str(key))
            values[fields[str(key)]] = value
        return values

    @staticmethod
    def resolve(command: str, config_file: str = None, **flags) -> "RunConfig":
        """
        Merge default values, the configuration file and the
        command line flags, in increasing priority.

            Args:
                command (str): command being run
                config_file (str): optional YAML file
                flags: values given on the command line, None when absent

            Returns:
                config (RunConfig)
        """
        values = RunDefaultParams.to_dict()
        if config_file is not None:
            values.update(RunConfig.from_file(config_file))
        for name, value in flags.items():
            if name not in values:
                raise ConfigurationError("param {} is not defined".format(name))
            if value is not None:
                values[name] = value
        return RunConfig(command, **values)
