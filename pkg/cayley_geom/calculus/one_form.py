from dataclasses import dataclass

import numpy as np

from cayley_geom.lattice import GroupLattice
from cayley_geom.numeric import Backend
from .calculus_exception import CalculusException
from .scalar_field import ScalarField


@dataclass(frozen=True, eq=False)
class OneForm:
    """omega = sum_h f^h theta^h, coefficients[g, i] = f^{h_i}(g)."""
    lattice: GroupLattice
    coefficients: np.ndarray

    def __post_init__(self):
        expected = (self.lattice.sites, self.lattice.n)
        if self.coefficients.shape != expected:
            raise CalculusException(f"1-form needs coefficient shape {expected}, got {self.coefficients.shape}")

    @classmethod
    def zero(cls, lattice: GroupLattice, backend: Backend = Backend.EXACT) -> 'OneForm':
        return cls(lattice, backend.zeros((lattice.sites, lattice.n)))

    @classmethod
    def basis(cls, lattice: GroupLattice, h: int, backend: Backend = Backend.EXACT) -> 'OneForm':
        """theta^h for an arrow element h."""
        coefficients = backend.zeros((lattice.sites, lattice.n))
        coefficients[:, lattice.position(h)] = backend.scalar(1)
        return cls(lattice, coefficients)

    @classmethod
    def theta(cls, lattice: GroupLattice, backend: Backend = Backend.EXACT) -> 'OneForm':
        """The sum form theta = sum_h theta^h."""
        return cls(lattice, backend.ones((lattice.sites, lattice.n)))

    @classmethod
    def from_components(cls, lattice: GroupLattice, components: dict) -> 'OneForm':
        """Builds a form from {arrow element: ScalarField}; missing arrows are zero."""
        backend = next(iter(components.values())).backend if components else Backend.EXACT
        coefficients = backend.zeros((lattice.sites, lattice.n))
        for h, field in components.items():
            coefficients[:, lattice.position(h)] = field.values
        return cls(lattice, coefficients)

    @property
    def backend(self) -> Backend:
        return Backend.of(self.coefficients)

    def component(self, h: int) -> ScalarField:
        return ScalarField(self.lattice, self.coefficients[:, self.lattice.position(h)].copy())

    def scaled(self, f: ScalarField) -> 'OneForm':
        """f omega, with f multiplied from the left."""
        return OneForm(self.lattice, self.coefficients * f.values[:, None])

    def __add__(self, other: 'OneForm') -> 'OneForm':
        return OneForm(self.lattice, self.coefficients + other.coefficients)

    def __sub__(self, other: 'OneForm') -> 'OneForm':
        return OneForm(self.lattice, self.coefficients - other.coefficients)

    def is_zero(self) -> bool:
        return self.backend.is_zero(self.coefficients)

    def equals(self, other: 'OneForm') -> bool:
        return self.backend.equal(self.coefficients, other.coefficients)
