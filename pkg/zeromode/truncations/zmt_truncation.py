"""
Zero-mode truncation of a bond, one dimension at a time
"""
from loguru import logger
from zeromode.data import ZmtDefaultParams
from zeromode.exceptions import UnusableCandidateError
from zeromode.interfaces import BondTruncation, TruncationOutcome
from zeromode.networks import TensorNetwork
from zeromode.zmt import ZmtOptions, zmt_cut
from .svd_truncation import svd_truncate


class ZmtTruncation(BondTruncation):
    """
    Successive single-dimension zero-mode cuts with the metric
    rebuilt after each cut. A cut without usable candidate
    falls back to an SVD cut.
    """
    def __init__(self,
                 kappa: int = ZmtDefaultParams.kappa.value,
                 options: ZmtOptions = None):
        self.kappa = kappa
        self.options = options or ZmtOptions()

    def truncate(self, network: TensorNetwork, bond: str,
                 target: int) -> TruncationOutcome:
        """
        Reduce the bond to the target dimension
        """
        iterations = 0
        fallback = False
        while network.bond_dim(bond) > target:
            dim = network.bond_dim(bond)
            try:
                network, _, report = zmt_cut(network, bond, self.kappa,
                                             self.options)
            except UnusableCandidateError as error:
                logger.warning(
                    "Falling back to SVD on bond {} at D={}: {}".format(
                        bond, dim, error))
                network = svd_truncate(network, bond, dim - 1)
                fallback = True
                continue
            iterations += report.cg_iterations
        return TruncationOutcome(network, iterations, fallback)
