from dataclasses import dataclass
from typing import Any, Dict, Sequence

import numpy as np

from cayley_geom.lattice import GroupLattice
from cayley_geom.numeric import Backend
from .connection_exception import ConnectionException


@dataclass(frozen=True, eq=False)
class Connection:
    """
    Transport matrices V_h(g), matrices[i, g] for arrow position i.
    Row index h'', column index h', so the entry is V^{h''}_{h,h'}.
    """
    lattice: GroupLattice
    matrices: np.ndarray

    def __post_init__(self):
        lattice = self.lattice
        expected = (lattice.n, lattice.sites, lattice.n, lattice.n)
        if self.matrices.shape != expected:
            raise ConnectionException(f"connection needs shape {expected}, got {self.matrices.shape}")

    @classmethod
    def identity(cls, lattice: GroupLattice, backend: Backend = Backend.EXACT) -> 'Connection':
        eye = backend.eye(lattice.n)
        return cls(lattice, np.stack([np.stack([eye.copy() for _ in range(lattice.sites)])
                                      for _ in range(lattice.n)]))

    @classmethod
    def constant(cls, lattice: GroupLattice, matrices: Dict[int, Any] | Sequence[Any],
                 backend: Backend = Backend.EXACT) -> 'Connection':
        """Site-independent V_h, given per arrow element or in arrow order."""
        if isinstance(matrices, dict):
            matrices = [matrices[h] for h in lattice.arrows]
        if len(matrices) != lattice.n:
            raise ConnectionException(f"expected {lattice.n} transport matrices, got {len(matrices)}")
        per_arrow = []
        for i, matrix in enumerate(matrices):
            matrix = backend.array(matrix)
            if matrix.shape != (lattice.n, lattice.n):
                raise ConnectionException(f"transport matrix must be {lattice.n}x{lattice.n}",
                                          arrow=lattice.arrow_label(i))
            per_arrow.append(np.stack([matrix.copy() for _ in range(lattice.sites)]))
        return cls(lattice, np.stack(per_arrow))

    @classmethod
    def per_site(cls, lattice: GroupLattice, matrices: Sequence[Sequence[Any]],
                 backend: Backend = Backend.EXACT) -> 'Connection':
        """matrices[i][g] is V_{h_i}(g)."""
        return cls(lattice, backend.array([list(per_arrow) for per_arrow in matrices]))

    @property
    def backend(self) -> Backend:
        return Backend.of(self.matrices)

    def matrix(self, h: int, g: int) -> np.ndarray:
        """V_h(g) for an arrow element h."""
        return self.matrices[self.lattice.position(h), g]

    def field(self, i: int) -> np.ndarray:
        """V_{h_i} at every site, shape (sites, n, n)."""
        return self.matrices[i]

    @property
    def is_constant(self) -> bool:
        return all(self.backend.equal(self.matrices[:, g], self.matrices[:, 0]) for g in range(self.lattice.sites))

    def with_matrices(self, matrices: np.ndarray) -> 'Connection':
        return Connection(self.lattice, matrices)

    def equals(self, other: 'Connection') -> bool:
        return self.backend.equal(self.matrices, other.matrices)
