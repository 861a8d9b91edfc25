from dataclasses import dataclass
from typing import List, Optional

import numpy as np

from cayley_geom.connection import Connection, is_compatible
from cayley_geom.curvature import torsion
from cayley_geom.lattice import GroupLattice
from cayley_geom.metric import MetricField, validate_metric
from cayley_geom.numeric import Backend, FLOAT_TOLERANCE, common_backend
from .solver_exception import SolverException


@dataclass(frozen=True, eq=False)
class ReflectionAnalysis:
    """
    A_ij = J_i(V_ij) - V_ij at one site for two Levi-Civita connections related by isometries J_i.
    symmetric: A_ij = A_ji (None for i = j)
    orthogonal: A_ij is orthogonal to l_j - l_i
    reflection: A_ij (A_ij + 2 V_ij) = 0, so J_i reflects V_ij in the hyperplane normal to A_ij
    """
    site: int
    i: int
    j: int
    a: np.ndarray
    symmetric: Optional[bool]
    orthogonal: bool
    reflection: bool

    @property
    def is_identity(self) -> bool:
        return Backend.of(self.a).is_zero(self.a)

    @property
    def normal(self) -> Optional[np.ndarray]:
        """Normal of the reflection hyperplane, None when J_i leaves V_ij alone."""
        return None if self.is_identity else self.a


def _check(lattice: GroupLattice, m: MetricField, c: Connection, tolerance: float):
    if not is_compatible(lattice, m, c, tolerance) or not torsion(lattice, c).is_zero(tolerance=tolerance):
        raise SolverException("reflection analysis needs torsion-free connections compatible with the metric")


def reflection_freedom(lattice: GroupLattice, m: MetricField, c1: Connection, c2: Connection,
                       tolerance: float = FLOAT_TOLERANCE) -> List[ReflectionAnalysis]:
    if not lattice.is_hypercubic:
        raise SolverException("reflection analysis needs a hypercubic lattice")
    if not validate_metric(lattice, m, tolerance).is_riemannian:
        raise SolverException("reflection analysis needs a positive definite metric")
    _check(lattice, m, c1, tolerance)
    _check(lattice, m, c2, tolerance)
    backend = common_backend(m.values, c1.matrices, c2.matrices)
    values = backend.convert(m.values)
    v1, v2 = backend.convert(c1.matrices), backend.convert(c2.matrices)
    eye = backend.eye(lattice.n)
    result = []
    for g in range(lattice.sites):
        metric = values[g]
        for i in range(lattice.n):
            for j in range(lattice.n):
                a = v2[i, g][:, j] - v1[i, g][:, j]
                symmetric = None
                if i != j:
                    symmetric = backend.is_zero(a - (v2[j, g][:, i] - v1[j, g][:, i]), tolerance)
                orthogonal = backend.is_zero_scalar(a.dot(metric).dot(eye[j] - eye[i]), tolerance)
                reflection = backend.is_zero_scalar(a.dot(metric).dot(a + 2 * v1[i, g][:, j]), tolerance)
                result.append(ReflectionAnalysis(g, i, j, a, symmetric, orthogonal, reflection))
    return result
