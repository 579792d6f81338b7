"""
Z2 lattice gauge theory: operators, parameters and
the plaquette evolution operator as a periodic MPO
"""
from functools import reduce
from typing import Dict, List, NamedTuple
import numpy as np

SIGMA_X = np.array([[0.0, 1.0], [1.0, 0.0]])
SIGMA_Z = np.array([[1.0, 0.0], [0.0, -1.0]])
LOOP_DIM = 2


class ModelParams(NamedTuple):
    """
    H = -g sum_p B_p - sum_s sigma^x_s, evolved in steps of dbeta
    """

    g: float
    dbeta: float
    beta_max: float = 0.0

    @property
    def epsilon(self) -> float:
        """
        epsilon = g dbeta / 2
        """
        return self.g * self.dbeta / 2.0

    def inverse(self) -> "ModelParams":
        """
        Parameters of the formal inverse step
        """
        return self._replace(dbeta=-self.dbeta)


def kron_all(operators: List[np.ndarray]) -> np.ndarray:
    """
    Tensor product of a list of operators
    """
    return reduce(np.kron, operators)


def model_operators() -> Dict[str, np.ndarray]:
    """
    Dense operators of a single plaquette:
    sigma_x, sigma_z, A_p = sigma_x^4, B_p = sigma_z^4 and
    the Gauss law projector factor (1 + A_p)/2
    """
    a_p = kron_all([SIGMA_X] * 4)
    b_p = kron_all([SIGMA_Z] * 4)
    return {
        "sigma_x": SIGMA_X.copy(),
        "sigma_z": SIGMA_Z.copy(),
        "A_p": a_p,
        "B_p": b_p,
        "gauss_projector_factor": 0.5 * (np.eye(16) + a_p),
    }


def electric_operator(time: float) -> np.ndarray:
    """
    exp(time sigma_x) = cosh(time) I + sinh(time) sigma_x
    """
    return np.cosh(time) * np.eye(2) + np.sinh(time) * SIGMA_X


class PlaquetteMPO(NamedTuple):
    """
    exp(epsilon B_p) as four corner tensors W[s, s', l, l'] with a
    loop index of length 2 that is diagonal in (l, l')
    """

    ops: List[np.ndarray]
    epsilon: float

    def to_matrix(self) -> np.ndarray:
        """
        Contract the loop into a 16 x 16 operator, site 1 slowest
        """
        first, second, third, fourth = self.ops
        dense = np.einsum("amij,bnjk,cokl,dpli->abcdmnop", first, second,
                          third, fourth)
        return dense.reshape(16, 16)


def build_plaquette_mpo(params: ModelParams) -> PlaquetteMPO:
    """
    Channels (cosh e)^(1/4) I and (sinh e)^(1/4) sigma_z on
    every corner. A negative epsilon keeps the sign of sinh on the
    first corner, which gives the formal inverse step.

        Args:
            params (ModelParams): coupling and time step

        Returns:
            mpo (PlaquetteMPO)
    """
    epsilon = params.epsilon
    identity_weight = np.cosh(epsilon)**0.25
    flip_weight = abs(np.sinh(epsilon))**0.25
    ops = []
    for corner in range(4):
        sign = np.sign(epsilon) if corner == 0 and epsilon < 0 else 1.0
        tensor = np.zeros((2, 2, LOOP_DIM, LOOP_DIM))
        tensor[:, :, 0, 0] = identity_weight * np.eye(2)
        tensor[:, :, 1, 1] = sign * flip_weight * SIGMA_Z
        ops.append(tensor)
    return PlaquetteMPO(ops, epsilon)
