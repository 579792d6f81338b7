"""
SVD truncation of a bond after a QR split of its two tensors
"""
import numpy as np
import scipy.linalg
from loguru import logger
from zeromode.interfaces import BondTruncation, TruncationOutcome
from zeromode.networks import TensorNetwork
from zeromode.tensors import from_matrix, matrixize, svd


def svd_truncate(network: TensorNetwork, bond: str,
                 target: int) -> TensorNetwork:
    """
    Keep the target largest singular values of the bond matrix
    R_A R_B^T, where R_A and R_B come from QR decompositions of the
    two tensors. The square roots of the kept values are shared
    between both sides.

        Args:
            network (TensorNetwork): network holding the bond
            bond (str): bond label
            target (int): new bond dimension

        Returns:
            network (TensorNetwork): network with the truncated bond
    """
    first, second = network.endpoints(bond)
    tensor_a = network[first]
    tensor_b = network[second]
    rows_a = [label for label in tensor_a.axes if label != bond]
    rows_b = [label for label in tensor_b.axes if label != bond]
    matrix_a = matrixize(tensor_a, rows_a, [bond])
    matrix_b = matrixize(tensor_b, rows_b, [bond])
    q_a, r_a = scipy.linalg.qr(matrix_a.matrix, mode="economic")
    q_b, r_b = scipy.linalg.qr(matrix_b.matrix, mode="economic")
    decomposition = svd(r_a @ r_b.T)
    kept = min(target, decomposition.s.size)
    roots = np.sqrt(decomposition.s[:kept])
    if kept < decomposition.s.size:
        logger.debug("SVD on bond {} discards weight {:.3e}".format(
            bond, float(np.sum(decomposition.s[kept:]**2))))
    new_a = q_a @ (decomposition.u[:, :kept] * roots)
    new_b = q_b @ (decomposition.v[:, :kept] * roots)
    new_a = from_matrix(new_a, matrix_a.row_axes, matrix_a.row_shape(),
                        [bond], [kept]).transpose(tensor_a.axes)
    new_b = from_matrix(new_b, matrix_b.row_axes, matrix_b.row_shape(),
                        [bond], [kept]).transpose(tensor_b.axes)
    return network.update({first: new_a, second: new_b})


class SvdTruncation(BondTruncation):
    """
    Environment free SVD truncation
    """
    def truncate(self, network: TensorNetwork, bond: str,
                 target: int) -> TruncationOutcome:
        """
        Reduce the bond to the target dimension in one SVD
        """
        return TruncationOutcome(svd_truncate(network, bond, target), 0,
                                 False)
