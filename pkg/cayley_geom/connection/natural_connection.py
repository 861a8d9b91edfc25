from typing import Any, Optional

from cayley_geom.lattice import GroupLattice
from cayley_geom.metric import MetricField, invariance_class, permutation_matrix, propagate
from cayley_geom.numeric import FLOAT_TOLERANCE
from .connection import Connection
from .connection_exception import ConnectionException


def natural_connection(lattice: GroupLattice, m: MetricField, tolerance: float = FLOAT_TOLERANCE) -> Connection:
    """V_h = P_h, compatible with every right-invariant metric."""
    if not invariance_class(lattice, m, tolerance).right_invariant:
        raise ConnectionException("metric is not right-invariant")
    backend = m.backend
    return Connection.constant(lattice, [permutation_matrix(lattice, i, backend) for i in range(lattice.n)], backend)


def propagate_metric(lattice: GroupLattice, c: Connection, seed: Any, base: Optional[int] = None,
                     tolerance: float = FLOAT_TOLERANCE) -> MetricField:
    """The metric compatible with c taking the seed value at the base site, if one exists."""
    return propagate(lattice, seed, lambda g, i: c.matrices[i, g], base=base, backend=c.backend,
                     tolerance=tolerance)
