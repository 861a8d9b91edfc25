import numpy as np

from cayley_geom.lattice import GroupLattice
from cayley_geom.metric import MetricField, inverse_metric
from cayley_geom.numeric import Backend, NumericException, FLOAT_TOLERANCE, common_backend
from .connection import Connection
from .connection_exception import ConnectionException


def compatibility_residual(lattice: GroupLattice, m: MetricField, c: Connection) -> np.ndarray:
    """residual[i, g] = g(g h_i) - V_{h_i}(g)^T g(g) V_{h_i}(g)"""
    residual = np.empty_like(c.matrices) if common_backend(m.values, c.matrices) is Backend.EXACT \
        else np.empty(c.matrices.shape)
    for i in range(lattice.n):
        shifted = m.values[lattice.shift(i)]
        for g in range(lattice.sites):
            v = c.matrices[i, g]
            residual[i, g] = shifted[g] - v.T.dot(m.values[g]).dot(v)
    return residual


def is_compatible(lattice: GroupLattice, m: MetricField, c: Connection, tolerance: float = FLOAT_TOLERANCE) -> bool:
    residual = compatibility_residual(lattice, m, c)
    return Backend.of(residual).is_zero(residual, tolerance)


def isometry_preservation_check(lattice: GroupLattice, m: MetricField, c: Connection,
                                tolerance: float = FLOAT_TOLERANCE) -> bool:
    """
    Inner products at g of the transported basis vectors V_{h,h'} reproduce g_{h',h''} at g h.
    Evaluated entry by entry, independently of the matrix form of the residual.
    """
    backend = common_backend(m.values, c.matrices)
    n = lattice.n
    for i in range(n):
        for g in range(lattice.sites):
            target = lattice.site_after(g, i)
            v = c.matrices[i, g]
            for p in range(n):
                for q in range(n):
                    product = sum(v[a, p] * m.values[g, a, b] * v[b, q] for a in range(n) for b in range(n))
                    if not backend.is_zero_scalar(product - m.values[target, p, q], tolerance):
                        return False
    return True


def inverse_transport(lattice: GroupLattice, c: Connection) -> np.ndarray:
    """U_h = V_h^-1 at every site."""
    backend = c.backend
    result = np.empty_like(c.matrices)
    for i in range(lattice.n):
        for g in range(lattice.sites):
            try:
                result[i, g] = backend.inv(c.matrices[i, g])
            except NumericException:
                raise ConnectionException("transport matrix is singular",
                                          site=lattice.site_label(g), arrow=lattice.arrow_label(i))
    return result


def contravariant_residual(lattice: GroupLattice, m: MetricField, c: Connection) -> np.ndarray:
    """residual[i, g] = h(g h_i) - U_{h_i}(g) h(g) U_{h_i}(g)^T with h the inverse metric."""
    inverse = inverse_metric(lattice, m)
    u = inverse_transport(lattice, c)
    residual = np.empty_like(u)
    for i in range(lattice.n):
        shifted = inverse[lattice.shift(i)]
        for g in range(lattice.sites):
            residual[i, g] = shifted[g] - u[i, g].dot(inverse[g]).dot(u[i, g].T)
    return residual
