import logging
from dataclasses import dataclass
from typing import Tuple

import numpy as np

from cayley_geom.lattice import GroupLattice
from cayley_geom.metric import MetricField, validate_metric
from cayley_geom.numeric import Backend, FLOAT_TOLERANCE, diagonalize_congruence, exact_sqrt
from .connection import Connection
from .connection_exception import ConnectionException

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class Coframe:
    """
    Orthonormal coframe: e[g] has rows a and columns h with e^T eta e = g(g).
    e_inverse[g] is the dual frame, with columns a.
    """
    lattice: GroupLattice
    e: np.ndarray
    eta: np.ndarray
    e_inverse: np.ndarray

    @property
    def backend(self) -> Backend:
        return Backend.of(self.e)


def orthonormal_factor(matrix: np.ndarray, tolerance: float = FLOAT_TOLERANCE) -> Tuple[np.ndarray, np.ndarray]:
    """
    E and eta = diag(+1..+1, -1..-1) with E^T eta E = matrix. For positive definite matrices E is
    upper triangular with positive diagonal. E is exact only when every congruence pivot is a square.
    """
    backend = Backend.of(matrix)
    basis, diagonal = diagonalize_congruence(matrix, tolerance)
    signs = [backend.sign(d, tolerance) for d in diagonal]
    roots = [exact_sqrt(abs(d)) if backend is Backend.EXACT else None for d in diagonal]
    if all(r is not None for r in roots):
        scale = np.diag(np.array(roots, dtype=object))
        e = Backend.EXACT.array(scale).dot(Backend.EXACT.inv(basis))
    else:
        scale = np.diag([float(np.sqrt(abs(float(d)))) for d in diagonal])
        e = scale.dot(np.linalg.inv(Backend.FLOAT.convert(basis)))
    order = sorted(range(len(signs)), key=lambda k: -signs[k])
    e = e[order]
    eta_backend = Backend.of(e)
    eta = eta_backend.zeros((len(signs), len(signs)))
    for row, k in enumerate(order):
        eta[row, row] = eta_backend.scalar(signs[k])
    return e, eta


def build_coframe(lattice: GroupLattice, m: MetricField, tolerance: float = FLOAT_TOLERANCE) -> Coframe:
    if not validate_metric(lattice, m, tolerance).is_constant:
        raise ConnectionException("coframe needs a metric of constant signature")
    factors = [orthonormal_factor(m.at(g), tolerance) for g in range(lattice.sites)]
    exact = all(Backend.of(e) is Backend.EXACT for e, _ in factors)
    if not exact:
        logger.warning("metric pivots are not squares, coframe uses floats")
    backend = Backend.EXACT if exact else Backend.FLOAT
    e = np.stack([backend.convert(f[0]) for f in factors])
    eta = backend.convert(factors[0][1])
    e_inverse = np.stack([backend.inv(e[g]) for g in range(lattice.sites)])
    return Coframe(lattice, e, eta, e_inverse)


def frame_connection(lattice: GroupLattice, cf: Coframe, c: Connection) -> np.ndarray:
    """L_h(g) = E(g) V_h(g) E^-1(g h), indexed [i, g]."""
    backend = Backend.FLOAT if Backend.FLOAT in (cf.backend, c.backend) else Backend.EXACT
    result = backend.zeros(c.matrices.shape)
    for i in range(lattice.n):
        for g in range(lattice.sites):
            l = cf.e[g].dot(c.matrices[i, g]).dot(cf.e_inverse[lattice.site_after(g, i)])
            result[i, g] = backend.convert(l) if backend is Backend.FLOAT else l
    return result


def frame_isometry_residual(lattice: GroupLattice, cf: Coframe, frame: np.ndarray) -> np.ndarray:
    """L^T eta L - eta for every arrow and site; zero for compatible connections."""
    result = np.empty_like(frame)
    for i in range(lattice.n):
        for g in range(lattice.sites):
            result[i, g] = frame[i, g].T.dot(cf.eta).dot(frame[i, g]) - cf.eta
    return result


def rotation_angles(lattice: GroupLattice, cf: Coframe, frame: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """
    For two arrows and a Euclidean coframe every L_h(g) lies in O(2). Returns the angle of the
    rotation part atan2(L[1,0], L[0,0]) and the determinant sign, both indexed [i, g].
    """
    if lattice.n != 2:
        raise ConnectionException(f"rotation angles need two arrows, lattice has {lattice.n}")
    if not Backend.of(cf.eta).equal(cf.eta, Backend.of(cf.eta).eye(2)):
        raise ConnectionException("rotation angles need a Euclidean coframe")
    values = Backend.FLOAT.convert(frame)
    angles = np.arctan2(values[:, :, 1, 0], values[:, :, 0, 0])
    orientation = np.sign(np.linalg.det(values)).astype(int)
    return angles, orientation
