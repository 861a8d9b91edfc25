import logging
from dataclasses import dataclass
from typing import Any, List, Sequence

import numpy as np
import sympy

from cayley_geom.connection import Connection
from cayley_geom.lattice import GroupLattice
from cayley_geom.metric import MetricField
from cayley_geom.numeric import Backend, NumericException
from .solver_exception import SolverException

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class ConstantMetricFamily:
    """Constant symmetric matrices preserved by every transport matrix of a constant connection."""
    lattice: GroupLattice
    connection: Connection
    basis: List[np.ndarray]

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def member(self, coefficients: Sequence[Any]) -> MetricField:
        if len(coefficients) != self.dimension:
            raise SolverException(f"family has dimension {self.dimension}, got {len(coefficients)} coefficients")
        matrix = sum((Backend.EXACT.scalar(a) * b for a, b in zip(coefficients, self.basis)),
                     Backend.EXACT.zeros((self.lattice.n, self.lattice.n)))
        return MetricField.constant(self.lattice, matrix)

    def contains(self, matrix: Any) -> bool:
        """Symmetric, invertible and compatible with the connection."""
        matrix = Backend.EXACT.array(matrix)
        if not Backend.EXACT.equal(matrix, matrix.T):
            return False
        try:
            Backend.EXACT.inv(matrix)
        except NumericException:
            return False
        v = self.connection.matrices[:, 0]
        return all(Backend.EXACT.equal(v[i].T.dot(matrix).dot(v[i]), matrix) for i in range(self.lattice.n))


def compatible_constant_metrics(lattice: GroupLattice, c: Connection) -> ConstantMetricFamily:
    """Nullspace of g -> g - V_h^T g V_h over the symmetric matrices, for a constant exact connection."""
    if c.backend is not Backend.EXACT:
        raise SolverException("constant metric family needs an exact connection")
    if not c.is_constant:
        raise SolverException("constant metric family needs a constant connection")
    n = lattice.n
    unknowns = {}
    g = np.empty((n, n), dtype=object)
    for r in range(n):
        for s in range(r, n):
            unknowns[(r, s)] = sympy.Symbol(f"g_{r}_{s}")
            g[r, s] = g[s, r] = unknowns[(r, s)]
    equations = []
    for i in range(n):
        v = c.matrices[i, 0]
        difference = g - v.T.dot(g).dot(v)
        equations.extend(sympy.expand(difference[r, s]) for r in range(n) for s in range(r, n))
    symbols = list(unknowns.values())
    matrix, _ = sympy.linear_eq_to_matrix(equations, symbols)
    basis = []
    for vector in matrix.nullspace():
        values = dict(zip(symbols, vector))
        basis.append(np.vectorize(lambda e: sympy.Rational(e.xreplace(values)), otypes=[object])(g))
    logger.debug("constant metrics compatible with the connection on %s: dimension %d",
                 lattice.group.name, len(basis))
    return ConstantMetricFamily(lattice, c, basis)
