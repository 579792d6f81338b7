"""
Errors raised by the zeromode library.
The CLI maps them to exit codes.
"""


class ZeroModeError(Exception):
    """
    Root of every error raised by zeromode
    """


class ConfigurationError(ZeroModeError, ValueError):
    """
    Invalid parameter or option value.

        Args:
            message (str): description of the problem
            flag (str): command line flag the value came from, if any
    """
    def __init__(self, message: str, flag: str = None):
        super().__init__(message)
        self.flag = flag


class TensorShapeError(ZeroModeError, ValueError):
    """
    Axis lengths or labels are inconsistent
    """


class InvalidCutError(ZeroModeError):
    """
    The cut bond does not join exactly two tensors or
    the diagram falls apart once the bond is cut
    """


class NumericalError(ZeroModeError, ArithmeticError):
    """
    Numerically pathological input or non-convergence
    """


class StepFailedError(NumericalError):
    """
    A Trotter step failed.

        Args:
            step (int): index of the failing step
            beta (float): inverse temperature reached before the step
            message (str): description of the problem
            records (list): error records of the completed steps
    """
    def __init__(self, step: int, beta: float, message: str,
                 records: list = None):
        super().__init__("Step {} at beta={:.6g} failed: {}".format(
            step, beta, message))
        self.step = step
        self.beta = beta
        self.records = records or []


class UnusableCandidateError(NumericalError):
    """
    No zero-mode candidate can be used to cut the bond
    """


class NoRealEigenvalueError(UnusableCandidateError):
    """
    The candidate matrix has no usable real eigenvalue
    """


class IllConditionedInsertionError(UnusableCandidateError):
    """
    The insertion I - Z/E_max is not singular to working precision
    """


class DegenerateEigenvalueError(NumericalError):
    """
    The dominant real eigenvalue is defective, so its
    derivative is not available
    """
