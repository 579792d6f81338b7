"""
Matrix decompositions on tensors
"""
from typing import List, NamedTuple, Sequence, Union
import numpy as np
import scipy.linalg
from loguru import logger
from zeromode.data import Constants
from zeromode.exceptions import (ConfigurationError, NumericalError,
                                 TensorShapeError)
from .tensor import Tensor


class Matrixization(NamedTuple):
    """
    A tensor read as a matrix whose rows run over
    row_axes and whose columns run over col_axes
    """

    source: Tensor
    row_axes: tuple
    col_axes: tuple
    rows: int
    cols: int

    @property
    def matrix(self) -> np.ndarray:
        """
        Returns:
            The rows x cols matrix
        """
        ordered = self.source.transpose(self.row_axes + self.col_axes)
        return ordered.data.reshape(self.rows, self.cols)

    def row_shape(self) -> tuple:
        """
        Lengths of the row axes
        """
        return tuple(self.source.dim(label) for label in self.row_axes)

    def col_shape(self) -> tuple:
        """
        Lengths of the column axes
        """
        return tuple(self.source.dim(label) for label in self.col_axes)


class SvdResult(NamedTuple):
    """
    m = u @ diag(s) @ v.T
    """

    u: np.ndarray
    s: np.ndarray
    v: np.ndarray


class EigenSym(NamedTuple):
    """
    Ascending eigenvalues and orthonormal eigenvectors in columns
    """

    values: np.ndarray
    vectors: np.ndarray


class EigenPairGeneral(NamedTuple):
    """
    Eigenvalue of a general real matrix with its right and left
    eigenvectors. Complex numbers are stored as real/imaginary pairs.
    When the eigenvalue is simple, sum_j L_j R_j = 1.
    """

    value_re: float
    value_im: float
    right: np.ndarray  # shape (n, 2)
    left: np.ndarray  # shape (n, 2)
    overlap: float  # |L.R| of the unit norm vectors before normalization

    @property
    def value(self) -> complex:
        """
        Eigenvalue as a complex number
        """
        return complex(self.value_re, self.value_im)

    @property
    def is_real(self) -> bool:
        """
        True when the imaginary part was found to be zero
        """
        return self.value_im == 0.0

    @property
    def is_simple(self) -> bool:
        """
        False when the left/right normalization is not possible
        """
        return self.overlap >= Constants().defective_tolerance

    def right_vector(self) -> np.ndarray:
        """
        Right eigenvector as a complex array
        """
        return self.right[:, 0] + 1j * self.right[:, 1]

    def left_vector(self) -> np.ndarray:
        """
        Left eigenvector as a complex array
        """
        return self.left[:, 0] + 1j * self.left[:, 1]


def matrixize(t: Tensor,
              row_axes: Sequence[str],
              col_axes: Sequence[str] = None) -> Matrixization:
    """
    Read a tensor as a matrix.

        Args:
            t (Tensor): source tensor
            row_axes (list): axes running over the rows
            col_axes (list): axes running over the columns. By default
                             the remaining axes in their declared order.

        Returns:
            matrixization (Matrixization)
    """
    row_axes = tuple(row_axes)
    if col_axes is None:
        col_axes = tuple(label for label in t.axes if label not in row_axes)
    col_axes = tuple(col_axes)
    if sorted(row_axes + col_axes) != sorted(t.axes):
        raise ConfigurationError(
            "Rows {} and columns {} do not partition {}".format(
                row_axes, col_axes, t.axes))
    rows = int(np.prod([t.dim(label) for label in row_axes], dtype=np.int64))
    cols = int(np.prod([t.dim(label) for label in col_axes], dtype=np.int64))
    return Matrixization(t, row_axes, col_axes, rows, cols)


def from_matrix(matrix: np.ndarray, row_axes: Sequence[str],
                row_shape: Sequence[int], col_axes: Sequence[str],
                col_shape: Sequence[int]) -> Tensor:
    """
    Inverse of matrixize: reshape a matrix into a labelled tensor
    """
    shape = tuple(row_shape) + tuple(col_shape)
    if int(np.prod(shape, dtype=np.int64)) != matrix.size:
        raise TensorShapeError("Matrix of shape {} cannot hold {}".format(
            matrix.shape, shape))
    return Tensor(np.reshape(matrix, shape), tuple(row_axes) + tuple(col_axes))


def _as_matrix(m: Union[Matrixization, np.ndarray]) -> np.ndarray:
    if isinstance(m, Matrixization):
        return m.matrix
    matrix = np.asarray(m, dtype=np.float64)
    if matrix.ndim != 2:
        raise TensorShapeError("Expected a matrix, got shape {}".format(
            matrix.shape))
    return matrix


def _check_finite(matrix: np.ndarray) -> None:
    if not np.all(np.isfinite(matrix)):
        raise NumericalError("Matrix has non finite entries")


def _check_square(matrix: np.ndarray) -> None:
    if matrix.shape[0] != matrix.shape[1]:
        raise TensorShapeError("Expected a square matrix, got {}".format(
            matrix.shape))


def svd(m: Union[Matrixization, np.ndarray]) -> SvdResult:
    """
    Thin singular value decomposition.

        Args:
            m (Matrixization or np.ndarray): matrix to be decomposed

        Returns:
            result (SvdResult): u, s and v with m = u diag(s) v^T, s
                                non negative and descending
    """
    matrix = _as_matrix(m)
    _check_finite(matrix)
    try:
        u, s, vt = scipy.linalg.svd(matrix,
                                    full_matrices=False,
                                    lapack_driver="gesdd")
    except np.linalg.LinAlgError:
        logger.warning("gesdd did not converge, retrying with gesvd")
        try:
            u, s, vt = scipy.linalg.svd(matrix,
                                        full_matrices=False,
                                        lapack_driver="gesvd")
        except np.linalg.LinAlgError as error:
            raise NumericalError("SVD did not converge") from error
    return SvdResult(u, s, vt.T)


def eig_sym(m: np.ndarray) -> EigenSym:
    """
    Eigendecomposition of a symmetric matrix. The input is
    symmetrized as (m + m^T)/2 before the solve.

        Args:
            m (np.ndarray): square matrix, symmetric up to round off

        Returns:
            result (EigenSym): ascending values, orthonormal vectors
    """
    matrix = _as_matrix(m)
    _check_square(matrix)
    _check_finite(matrix)
    scale = np.linalg.norm(matrix)
    asymmetry = np.linalg.norm(matrix - matrix.T)
    if asymmetry > Constants().symmetry_tolerance * scale:
        logger.warning(
            "Symmetrizing a matrix with relative asymmetry {:.3e}".format(
                asymmetry / scale))
    symmetric = 0.5 * (matrix + matrix.T)
    try:
        values, vectors = scipy.linalg.eigh(symmetric)
    except np.linalg.LinAlgError as error:
        raise NumericalError("Symmetric eigensolver failed") from error
    return EigenSym(values, vectors)


def _fix_phase(vector: np.ndarray) -> np.ndarray:
    """
    Rotate a vector so that its largest entry is real and positive
    """
    pivot = vector[np.argmax(np.abs(vector))]
    if pivot == 0:
        return vector
    return vector * (np.abs(pivot) / pivot)


def eig_general(m: np.ndarray) -> List[EigenPairGeneral]:
    """
    Full spectrum of a real square matrix with left and
    right eigenvectors. Eigenvalues whose imaginary part is
    below the real tolerance times the spectral radius are
    stored as real, with real eigenvectors.

        Args:
            m (np.ndarray): square real matrix

        Returns:
            pairs (list): EigenPairGeneral sorted by decreasing
                          magnitude, then decreasing real part
    """
    matrix = _as_matrix(m)
    _check_square(matrix)
    _check_finite(matrix)
    constants = Constants()
    try:
        values, left, right = scipy.linalg.eig(matrix, left=True, right=True)
    except np.linalg.LinAlgError as error:
        raise NumericalError("General eigensolver failed") from error

    radius = float(np.max(np.abs(values))) if values.size else 0.0
    order = np.lexsort((-values.real, -np.abs(values)))
    pairs = []
    for index in order:
        value = values[index]
        right_vector = right[:, index]
        left_vector = np.conj(left[:, index])
        is_real = abs(value.imag) <= constants.real_tolerance * radius
        if is_real:
            value = complex(value.real, 0.0)
            right_vector = np.real(_fix_phase(right_vector)).astype(complex)
            left_vector = np.real(_fix_phase(left_vector)).astype(complex)
        right_vector = right_vector / np.linalg.norm(right_vector)
        left_vector = left_vector / np.linalg.norm(left_vector)
        product = np.sum(left_vector * right_vector)
        overlap = float(np.abs(product))
        if overlap < constants.defective_tolerance:
            logger.warning(
                "Eigenvalue {:.6e} looks defective, |L.R| = {:.3e}".format(
                    value, overlap))
        else:
            left_vector = left_vector / product
        pairs.append(
            EigenPairGeneral(
                float(value.real),
                float(value.imag),
                np.stack([right_vector.real, right_vector.imag], axis=1),
                np.stack([left_vector.real, left_vector.imag], axis=1),
                overlap,
            ))
    return pairs


def lstsq(a: np.ndarray, b: np.ndarray, cutoff: float = 1e-12) -> np.ndarray:
    """
    Least squares solution of a x = b through the pseudo inverse.

        Args:
            a (np.ndarray): matrix
            b (np.ndarray): vector or matrix of right hand sides
            cutoff (float): singular values below cutoff * s_max are
                            discarded

        Returns:
            x (np.ndarray): minimizer of |a x - b|
    """
    if not 0 < cutoff < 1:
        raise ConfigurationError(
            "cutoff must lie in (0, 1), got {}".format(cutoff))
    matrix = _as_matrix(a)
    rhs = np.asarray(b, dtype=np.float64)
    _check_finite(rhs)
    decomposition = svd(matrix)
    s = decomposition.s
    solution_shape = (matrix.shape[1], ) + rhs.shape[1:]
    if s.size == 0 or s[0] == 0:
        return np.zeros(solution_shape)
    kept = s > cutoff * s[0]
    u = decomposition.u[:, kept]
    v = decomposition.v[:, kept]
    projected = u.T @ rhs
    projected = projected / s[kept].reshape((-1, ) + (1, ) *
                                            (rhs.ndim - 1))
    return v @ projected
