from dataclasses import dataclass
from typing import Dict, Tuple

import numpy as np

from cayley_geom.lattice import GroupLattice, PairKind
from cayley_geom.numeric import Backend
from .calculus_exception import CalculusException
from .scalar_field import ScalarField


def _check_shape(lattice: GroupLattice, coefficients: np.ndarray, what: str):
    expected = (lattice.sites, lattice.n, lattice.n)
    if coefficients.shape != expected:
        raise CalculusException(f"{what} needs coefficient shape {expected}, got {coefficients.shape}")


@dataclass(frozen=True, eq=False)
class TwoFormRaw:
    """
    Coefficients in the theta^a ∩ theta^c basis, coefficients[g, a, c].
    Quadrangle entries are only defined up to gauge.
    """
    lattice: GroupLattice
    coefficients: np.ndarray

    def __post_init__(self):
        _check_shape(self.lattice, self.coefficients, "2-form")

    @classmethod
    def zero(cls, lattice: GroupLattice, backend: Backend = Backend.EXACT) -> 'TwoFormRaw':
        return cls(lattice, backend.zeros((lattice.sites, lattice.n, lattice.n)))

    @property
    def backend(self) -> Backend:
        return Backend.of(self.coefficients)

    def __add__(self, other: 'TwoFormRaw') -> 'TwoFormRaw':
        return TwoFormRaw(self.lattice, self.coefficients + other.coefficients)

    def __sub__(self, other: 'TwoFormRaw') -> 'TwoFormRaw':
        return TwoFormRaw(self.lattice, self.coefficients - other.coefficients)


@dataclass(frozen=True, eq=False)
class TwoFormCanonical:
    """
    Gauge-fixed 2-form. Biangle and triangle caps hold their coefficients, quadrangle caps hold
    the canonical components, which sum to zero over every chain.
    """
    lattice: GroupLattice
    coefficients: np.ndarray

    def __post_init__(self):
        _check_shape(self.lattice, self.coefficients, "2-form")

    @property
    def backend(self) -> Backend:
        return Backend.of(self.coefficients)

    def component(self, a: int, c: int) -> ScalarField:
        """Coefficient of theta^a ∩ theta^c for arrow elements a, c."""
        lattice = self.lattice
        return ScalarField(lattice, self.coefficients[:, lattice.position(a), lattice.position(c)].copy())

    def sector(self, kind: PairKind) -> Dict[Tuple[int, int], np.ndarray]:
        """Cap positions of one sector mapped to their per-site values."""
        lattice = self.lattice
        result = {}
        for a in range(lattice.n):
            for c in range(lattice.n):
                if lattice.cap_class(a, c).kind == kind:
                    result[(a, c)] = self.coefficients[:, a, c]
        return result

    def chain_sums(self) -> Dict[int, np.ndarray]:
        return {g: sum(self.coefficients[:, a, c] for a, c in self.lattice.sector_caps(g))
                for g in self.lattice.chains}

    def __add__(self, other: 'TwoFormCanonical') -> 'TwoFormCanonical':
        return TwoFormCanonical(self.lattice, self.coefficients + other.coefficients)

    def __sub__(self, other: 'TwoFormCanonical') -> 'TwoFormCanonical':
        return TwoFormCanonical(self.lattice, self.coefficients - other.coefficients)

    def is_zero(self) -> bool:
        return self.backend.is_zero(self.coefficients)

    def equals(self, other: 'TwoFormCanonical') -> bool:
        return self.backend.equal(self.coefficients, other.coefficients)
