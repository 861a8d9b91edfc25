from dataclasses import dataclass
from typing import Any, Dict, Sequence

import numpy as np

from cayley_geom.lattice import GroupLattice
from cayley_geom.numeric import Backend
from .metric_exception import MetricException


@dataclass(frozen=True, eq=False)
class MetricField:
    """The coefficients g_{h,h'}(g) of a metric in the ⊗_L basis, values[g, i, j]."""
    lattice: GroupLattice
    values: np.ndarray

    def __post_init__(self):
        expected = (self.lattice.sites, self.lattice.n, self.lattice.n)
        if self.values.shape != expected:
            raise MetricException(f"metric needs shape {expected}, got {self.values.shape}")

    @classmethod
    def constant(cls, lattice: GroupLattice, matrix: Any, backend: Backend = Backend.EXACT) -> 'MetricField':
        matrix = backend.array(matrix)
        if matrix.shape != (lattice.n, lattice.n):
            raise MetricException(f"constant metric must be {lattice.n}x{lattice.n}, got shape {matrix.shape}")
        return cls(lattice, np.stack([matrix.copy() for _ in range(lattice.sites)]))

    @classmethod
    def per_site(cls, lattice: GroupLattice, matrices: Dict[int, Any] | Sequence[Any],
                 backend: Backend = Backend.EXACT) -> 'MetricField':
        if isinstance(matrices, dict):
            missing = [g for g in range(lattice.sites) if g not in matrices]
            if missing:
                raise MetricException("no metric given", site=lattice.site_label(missing[0]))
            matrices = [matrices[g] for g in range(lattice.sites)]
        values = backend.array(list(matrices))
        return cls(lattice, values)

    @property
    def backend(self) -> Backend:
        return Backend.of(self.values)

    @property
    def is_constant(self) -> bool:
        return all(self.backend.equal(self.values[g], self.values[0]) for g in range(self.lattice.sites))

    def at(self, g: int) -> np.ndarray:
        return self.values[g]

    def scaled(self, factor: Any) -> 'MetricField':
        return MetricField(self.lattice, self.values * self.backend.scalar(factor))

    def equals(self, other: 'MetricField') -> bool:
        return self.backend.equal(self.values, other.values)
