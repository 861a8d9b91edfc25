from dataclasses import dataclass
from typing import Any, Callable, Union

import numpy as np

from cayley_geom.lattice import GroupLattice
from cayley_geom.numeric import Backend
from .calculus_exception import CalculusException


@dataclass(frozen=True, eq=False)
class ScalarField:
    """A function on the group, one value per element in enumeration order."""
    lattice: GroupLattice
    values: np.ndarray

    def __post_init__(self):
        if self.values.shape != (self.lattice.sites,):
            raise CalculusException(
                f"scalar field needs {self.lattice.sites} values, got shape {self.values.shape}")

    @classmethod
    def constant(cls, lattice: GroupLattice, value: Any, backend: Backend = Backend.EXACT) -> 'ScalarField':
        return cls(lattice, backend.array([value] * lattice.sites))

    @classmethod
    def indicator(cls, lattice: GroupLattice, g: int, backend: Backend = Backend.EXACT) -> 'ScalarField':
        """The function e^g, 1 at g and 0 elsewhere."""
        values = backend.zeros(lattice.sites)
        values[g] = backend.scalar(1)
        return cls(lattice, values)

    @classmethod
    def from_function(cls, lattice: GroupLattice, function: Callable[[int], Any],
                      backend: Backend = Backend.EXACT) -> 'ScalarField':
        return cls(lattice, backend.array([function(g) for g in range(lattice.sites)]))

    @property
    def backend(self) -> Backend:
        return Backend.of(self.values)

    def _other(self, other: Union['ScalarField', Any]):
        if isinstance(other, ScalarField):
            if other.lattice is not self.lattice:
                raise CalculusException("scalar fields live on different lattices")
            return other.values
        return self.backend.scalar(other)

    def __add__(self, other) -> 'ScalarField':
        return ScalarField(self.lattice, self.values + self._other(other))

    def __sub__(self, other) -> 'ScalarField':
        return ScalarField(self.lattice, self.values - self._other(other))

    def __mul__(self, other) -> 'ScalarField':
        return ScalarField(self.lattice, self.values * self._other(other))

    __rmul__ = __mul__

    def __neg__(self) -> 'ScalarField':
        return ScalarField(self.lattice, -self.values)

    def __getitem__(self, g: int):
        return self.values[g]

    def is_zero(self) -> bool:
        return self.backend.is_zero(self.values)

    def equals(self, other: 'ScalarField') -> bool:
        return self.backend.equal(self.values, other.values)
