import logging
from dataclasses import dataclass

import numpy as np

from cayley_geom.connection import orthonormal_factor
from cayley_geom.lattice import GroupLattice
from cayley_geom.metric import MetricField, validate_metric
from cayley_geom.numeric import Backend
from .development_exception import DevelopmentException

logger = logging.getLogger(__name__)

GRAM_TOLERANCE = 1e-12


@dataclass(frozen=True, eq=False)
class NBein:
    """Column h of vectors is u_h, with u^T eta u equal to the metric at the base site."""
    base: int
    vectors: np.ndarray
    eta: np.ndarray

    @property
    def backend(self) -> Backend:
        return Backend.of(self.vectors)

    def u(self, i: int) -> np.ndarray:
        return self.vectors[:, i]

    def gram(self) -> np.ndarray:
        return self.vectors.T.dot(self.eta).dot(self.vectors)

    def inner(self, a: np.ndarray, b: np.ndarray):
        return a.dot(self.eta).dot(b)


def build_nbein(lattice: GroupLattice, m: MetricField, base: int) -> NBein:
    """
    The coframe factorization of the metric at the base site: upper triangular with positive
    diagonal for positive definite metrics, so u_1 lies along the first axis.
    """
    if not 0 <= base < lattice.sites:
        raise DevelopmentException(f"base site {base} is not in the lattice")
    if not validate_metric(lattice, m).is_constant:
        raise DevelopmentException("n-bein needs a metric of constant signature")
    metric = m.at(base)
    vectors, eta = orthonormal_factor(metric)
    result = NBein(base, vectors, eta)
    backend = result.backend
    if backend is Backend.FLOAT and m.backend is Backend.EXACT:
        logger.warning("metric at %s has an irrational factorization, developing with floats",
                       lattice.site_label(base))
    if not backend.equal(result.gram(), metric, GRAM_TOLERANCE):
        raise DevelopmentException(f"n-bein does not reproduce the metric at {lattice.site_label(base)}")
    return result
