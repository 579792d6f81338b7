"""
Square plaquettes of four tensors with a virtual
entanglement loop threaded through their bonds
"""
from typing import List, Sequence, Union
import numpy as np
from loguru import logger
from zeromode.data import Constants
from zeromode.exceptions import ConfigurationError, TensorShapeError
from zeromode.tensors import Tensor, svd
from .network import TensorNetwork

SITES = 4


def ring_bond(site: int) -> str:
    """
    Label of the bond from site to site + 1
    """
    return "{}{}".format(site % SITES, (site + 1) % SITES)


def physical_label(site: int) -> str:
    """
    Label of the physical leg of a site
    """
    return "p{}".format(site)


def make_rng(seed: int) -> np.random.Generator:
    """
    Counter based generator used by every fixture
    """
    return np.random.Generator(np.random.Philox(seed))


class LoopPlaquette():
    """
    Four tensors on a square. Bond k joins site k to
    site k + 1 and carries a fused (D, d) index, the
    d part being the decoupled loop.
    """
    def __init__(self, network: TensorNetwork, bond_dim: int, loop_dim: int,
                 physical_dims: Sequence[int], noise: float, seed: int):
        self.network = network
        self.bond_dim = bond_dim
        self.loop_dim = loop_dim
        self.physical_dims = tuple(physical_dims)
        self.noise = noise
        self.seed = seed

    @property
    def bonds(self) -> List[str]:
        """
        Labels of the four ring bonds
        """
        return [ring_bond(site) for site in range(SITES)]

    @property
    def physical_labels(self) -> List[str]:
        """
        Labels of the physical legs, site by site
        """
        return [physical_label(site) for site in range(SITES)]


def _check_dims(**dims) -> None:
    for name, value in dims.items():
        if int(value) != value or value < 1:
            raise ConfigurationError("{} must be a positive integer".format(
                name), flag=name)


def _ring_tensors(cores: Sequence[np.ndarray]) -> TensorNetwork:
    tensors = {}
    for site, core in enumerate(cores):
        axes = (physical_label(site), ring_bond(site - 1), ring_bond(site))
        tensors[str(site)] = Tensor(core, axes)
    return TensorNetwork(tensors)


def _normalized(network: TensorNetwork) -> TensorNetwork:
    norm = np.sqrt(float(network.overlap().data))
    factor = norm**(-1.0 / len(network))
    return TensorNetwork({
        name: tensor.scale(factor)
        for name, tensor in network.tensors.items()
    })


def make_virtual_loop(bond_dim: int,
                      loop_dim: int,
                      phys_dim: int = 2,
                      noise: float = 0.0,
                      seed: int = 0,
                      normalize: bool = True) -> LoopPlaquette:
    """
    Random plaquette whose bonds are inflated by a loop
    index of length d that no physical leg sees. Every bond
    then has length D*d although D is enough to represent the
    state.

        Args:
            bond_dim (int): bond dimension D of the underlying plaquette
            loop_dim (int): length d of the loop index
            phys_dim (int): length of every physical leg
            noise (float): entries receive i.i.d. uniform noise in
                           [-noise, noise] after the loop is fused
            seed (int): seed of the Philox generator
            normalize (bool): rescale the tensors so that <psi|psi> = 1

        Returns:
            plaquette (LoopPlaquette)
    """
    _check_dims(D=bond_dim, d=loop_dim, phys_dim=phys_dim)
    if noise < 0:
        raise ConfigurationError("noise must be non negative", flag="noise")
    rng = make_rng(seed)
    base = [
        rng.uniform(-1.0, 1.0, size=(phys_dim, bond_dim, bond_dim))
        for _ in range(SITES)
    ]
    loop = np.eye(loop_dim)
    fused_dim = bond_dim * loop_dim
    cores = []
    for core in base:
        inflated = np.einsum("pab,jk->pajbk", core, loop)
        inflated = inflated.reshape(phys_dim, fused_dim, fused_dim)
        if noise > 0:
            inflated = inflated + rng.uniform(-noise, noise, size=inflated.shape)
        cores.append(inflated)
    network = _ring_tensors(cores)
    if normalize:
        network = _normalized(network)
    logger.debug("Built loop plaquette D={} d={} noise={} seed={}".format(
        bond_dim, loop_dim, noise, seed))
    return LoopPlaquette(network, bond_dim, loop_dim, [phys_dim] * SITES,
                         noise, seed)


def make_planted_plaquette(bond_dim: int,
                           phys_dim: int = 3,
                           seed: int = 0,
                           bond: str = "01") -> LoopPlaquette:
    """
    Random plaquette where a rank D - 1 matrix is inserted on one
    bond, so that the metric of that bond has zero modes.
    """
    _check_dims(D=bond_dim, phys_dim=phys_dim)
    rng = make_rng(seed)
    cores = [
        rng.uniform(-1.0, 1.0, size=(phys_dim, bond_dim, bond_dim))
        for _ in range(SITES)
    ]
    insertion = svd(rng.uniform(-1.0, 1.0, size=(bond_dim, bond_dim)))
    singular = insertion.s.copy()
    singular[-1] = 0.0
    deficient = insertion.u @ np.diag(singular) @ insertion.v.T
    owner = [site for site in range(SITES) if ring_bond(site) == bond][0]
    cores[owner] = np.einsum("pab,bc->pac", cores[owner], deficient)
    network = _normalized(_ring_tensors(cores))
    return LoopPlaquette(network, bond_dim, 1, [phys_dim] * SITES, 0.0, seed)


def full_state(source: Union[LoopPlaquette, TensorNetwork]) -> Tensor:
    """
    Exact contraction of a network into its state vector.

        Args:
            source (LoopPlaquette or TensorNetwork): network to contract

        Returns:
            state (Tensor): tensor over the open legs, in network order
    """
    network = source.network if isinstance(source, LoopPlaquette) else source
    labels = network.open_labels()
    dimension = 1
    for label in labels:
        for name in network.names:
            if label in network[name].axes:
                dimension *= network[name].dim(label)
    if dimension > Constants().full_state_limit:
        raise TensorShapeError(
            "State of dimension {} exceeds the limit {}".format(
                dimension,
                Constants().full_state_limit))
    return network.contract_all().transpose(labels)


def fidelity(first: Tensor, second: Tensor) -> float:
    """
    Overlap fidelity |<a|b>|^2 / (<a|a><b|b>)
    """
    a = first.transpose(second.axes).data.ravel()
    b = second.data.ravel()
    return float(np.dot(a, b)**2 / (np.dot(a, a) * np.dot(b, b)))
