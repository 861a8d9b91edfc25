from dataclasses import dataclass
from enum import Enum

import numpy as np

from cayley_geom.lattice import GroupLattice
from cayley_geom.numeric import Backend
from .calculus_exception import CalculusException


class TensorBasis(Enum):
    """theta^h ⊗_A theta^h' (plain product) or theta^h ⊗_L theta^h' (left-covariant)."""
    A = "A"
    L = "L"

    @classmethod
    def parse_str(cls, name: str) -> 'TensorBasis':
        try:
            return cls(name.strip().upper())
        except ValueError:
            raise CalculusException(f"unknown tensor basis '{name}'")


@dataclass(frozen=True, eq=False)
class LCTensor2:
    """Rank-2 tensor, coefficients[g, i, j] in the given basis."""
    lattice: GroupLattice
    coefficients: np.ndarray
    basis: TensorBasis = TensorBasis.L

    def __post_init__(self):
        expected = (self.lattice.sites, self.lattice.n, self.lattice.n)
        if self.coefficients.shape != expected:
            raise CalculusException(f"rank-2 tensor needs shape {expected}, got {self.coefficients.shape}")

    @property
    def backend(self) -> Backend:
        return Backend.of(self.coefficients)

    def equals(self, other: 'LCTensor2') -> bool:
        return self.basis == other.basis and self.backend.equal(self.coefficients, other.coefficients)


@dataclass(frozen=True, eq=False)
class LeftCovariantTensor:
    """Tensor of any rank in the ⊗_L basis, coefficients[g, i1, ..., ir]."""
    lattice: GroupLattice
    coefficients: np.ndarray

    def __post_init__(self):
        shape = self.coefficients.shape
        if len(shape) < 1 or shape[0] != self.lattice.sites or any(d != self.lattice.n for d in shape[1:]):
            raise CalculusException(f"tensor shape {shape} does not fit the lattice")

    @property
    def rank(self) -> int:
        return self.coefficients.ndim - 1

    @property
    def backend(self) -> Backend:
        return Backend.of(self.coefficients)

    def equals(self, other: 'LeftCovariantTensor') -> bool:
        return self.rank == other.rank and self.backend.equal(self.coefficients, other.coefficients)


def tensor_product(t1: LeftCovariantTensor, t2: LeftCovariantTensor) -> LeftCovariantTensor:
    """T1 ⊗_L T2: function coefficients multiply locally."""
    if t1.lattice is not t2.lattice:
        raise CalculusException("tensors live on different lattices")
    sites = t1.lattice.sites
    left = t1.coefficients.reshape(t1.coefficients.shape + (1,) * t2.rank)
    right = t2.coefficients.reshape((sites,) + (1,) * t1.rank + t2.coefficients.shape[1:])
    return LeftCovariantTensor(t1.lattice, left * right)
