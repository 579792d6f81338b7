"""
Init file for tensors module
"""
from .tensor import (
    Tensor,
    FusionRecord,
    identity,
    contract,
    contract_shared,
    shared_labels,
    fuse,
    split,
)
from .linalg import (
    Matrixization,
    SvdResult,
    EigenSym,
    EigenPairGeneral,
    matrixize,
    from_matrix,
    svd,
    eig_sym,
    eig_general,
    lstsq,
)
