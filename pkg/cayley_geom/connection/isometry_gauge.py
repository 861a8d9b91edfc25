from dataclasses import dataclass

import numpy as np

from cayley_geom.lattice import GroupLattice
from cayley_geom.metric import MetricField
from cayley_geom.numeric import Backend, FLOAT_TOLERANCE
from .connection import Connection
from .connection_exception import ConnectionException


@dataclass(frozen=True, eq=False)
class IsometryGauge:
    """Per-arrow, per-site isometries J_h(g) of g(g), matrices[i, g]."""
    lattice: GroupLattice
    matrices: np.ndarray

    @classmethod
    def constant(cls, lattice: GroupLattice, matrices, backend: Backend = Backend.EXACT) -> 'IsometryGauge':
        return cls(lattice, Connection.constant(lattice, matrices, backend).matrices)

    def check(self, m: MetricField, tolerance: float = FLOAT_TOLERANCE) -> None:
        """Raises unless J^T g J = g at every site and arrow."""
        lattice = self.lattice
        backend = Backend.of(self.matrices)
        for i in range(lattice.n):
            for g in range(lattice.sites):
                j = self.matrices[i, g]
                if not backend.equal(j.T.dot(m.at(g)).dot(j), m.at(g), tolerance):
                    raise ConnectionException("gauge matrix is not an isometry of the metric",
                                              site=lattice.site_label(g), arrow=lattice.arrow_label(i))


def apply_gauge(lattice: GroupLattice, c: Connection, j: IsometryGauge, m: MetricField,
                tolerance: float = FLOAT_TOLERANCE) -> Connection:
    """V_h -> J_h V_h, site by site."""
    j.check(m, tolerance)
    matrices = np.empty_like(c.matrices)
    for i in range(lattice.n):
        for g in range(lattice.sites):
            matrices[i, g] = j.matrices[i, g].dot(c.matrices[i, g])
    return c.with_matrices(matrices)
