import itertools
import logging
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, Optional, Tuple

import numpy as np

from cayley_geom.connection import Connection
from cayley_geom.curvature import transport_product
from cayley_geom.metric import MetricField
from cayley_geom.numeric import Backend, FLOAT_TOLERANCE, NumericException, common_backend
from .christoffel import christoffel, coordinate_curvature
from .coordinates_exception import CoordinatesException

logger = logging.getLogger(__name__)

Pair = Tuple[int, int]


def _parity(permutation: Tuple[int, ...]) -> int:
    sign = 1
    for a, b in itertools.combinations(range(len(permutation)), 2):
        if permutation[a] > permutation[b]:
            sign = -sign
    return sign


def _alternate(term: Callable[[int, int, int], np.ndarray], indices: Tuple[int, int, int]) -> np.ndarray:
    """Sum over the orderings of three indices with the sign of the permutation."""
    return sum(_parity(order) * term(*[indices[k] for k in order]) for order in itertools.permutations(range(3)))


@dataclass(frozen=True, eq=False)
class BianchiReport:
    """
    first[g, mu, nu, rho, sigma]     torsion form of the first identity, left minus right side
    second[g, nu, rho, sigma]        V_[nu R*_nu R_rho sigma] - R_[nu rho R*_{nu+rho} V_sigma], a matrix per entry
    cyclic[g, mu, nu, rho, sigma]    R^mu_[nu rho sigma], which vanishes for torsion-free connections
    isometries                       K_{mu nu} per site, when a metric is given
    """
    first: np.ndarray
    second: np.ndarray
    cyclic: np.ndarray
    torsion_free: bool
    isometries: Dict[Pair, np.ndarray] = field(default_factory=dict)
    isometries_preserve_metric: Optional[bool] = None
    reconstruction: Optional[np.ndarray] = None

    @property
    def backend(self) -> Backend:
        return Backend.of(self.first)

    def holds(self, tolerance: float = FLOAT_TOLERANCE) -> bool:
        backend = self.backend
        result = backend.is_zero(self.first, tolerance) and backend.is_zero(self.second, tolerance)
        if self.torsion_free:
            result = result and backend.is_zero(self.cyclic, tolerance)
        if self.reconstruction is not None:
            result = result and self.isometries_preserve_metric and backend.is_zero(self.reconstruction, tolerance)
        return result


def _isometries(c: Connection, kappa: Any, curvature_components: np.ndarray, m: MetricField,
                tolerance: float):
    """V_mu R*_mu V_nu = K_{mu nu} V_nu R*_nu V_mu, and R_{mu nu} = (K_{mu nu} - I) V_nu R*_nu V_mu / kappa^2."""
    lattice = c.lattice
    backend = common_backend(c.matrices, m.values)
    metric = backend.convert(m.values)
    kappa = backend.scalar(kappa)
    eye = backend.eye(lattice.n)
    isometries, preserve = {}, True
    reconstruction = backend.zeros(curvature_components.shape)
    for mu, nu in itertools.permutations(range(lattice.n), 2):
        forward = backend.convert(transport_product(lattice, c, mu, nu))
        backward = backend.convert(transport_product(lattice, c, nu, mu))
        try:
            k = np.stack([forward[g].dot(backend.inv(backward[g])) for g in range(lattice.sites)])
        except NumericException:
            raise CoordinatesException(f"transport around the plaquette ({mu}, {nu}) is singular")
        isometries[(mu, nu)] = k
        preserve = preserve and all(backend.equal(k[g].T.dot(metric[g]).dot(k[g]), metric[g], tolerance)
                                    for g in range(lattice.sites))
        rebuilt = np.stack([(k[g] - eye).dot(backward[g]) for g in range(lattice.sites)]) / (kappa * kappa)
        reconstruction[:, :, :, mu, nu] = backend.convert(curvature_components[:, :, :, mu, nu]) - rebuilt
    return isometries, preserve, reconstruction


def bianchi_hypercubic(c: Connection, kappa: Any = 1, m: Optional[MetricField] = None,
                       tolerance: float = FLOAT_TOLERANCE) -> BianchiReport:
    lattice = c.lattice
    field_ = christoffel(c, kappa)
    kappa = field_.kappa
    backend = c.backend
    q = field_.torsion()
    r = coordinate_curvature(c, kappa)
    theta = field_.theta
    matrices = c.matrices
    n = lattice.n
    sites = range(lattice.sites)

    def shifted(g: int, *arrows: int) -> int:
        for i in arrows:
            g = lattice.site_after(g, i)
        return g

    def torsion_side(a: int, b: int, c_: int) -> np.ndarray:
        moved = np.stack([matrices[a, g].dot(q[shifted(g, a), :, b, c_]) for g in sites])
        return (moved - q[:, :, a, b] * theta[:, c_][:, None]) / kappa

    def transported_curvature(a: int, b: int, c_: int) -> np.ndarray:
        return np.stack([matrices[a, g].dot(r[shifted(g, a), :, :, b, c_]) for g in sites])

    def curvature_transported(a: int, b: int, c_: int) -> np.ndarray:
        return np.stack([r[g, :, :, a, b].dot(matrices[c_, shifted(g, a, b)]) for g in sites])

    first = backend.zeros((lattice.sites, n, n, n, n))
    second = backend.zeros((lattice.sites, n, n, n, n, n))
    cyclic = backend.zeros((lattice.sites, n, n, n, n))
    for indices in itertools.product(range(n), repeat=3):
        nu, rho, sigma = indices
        cyclic[:, :, nu, rho, sigma] = _alternate(lambda a, b, c_: r[:, :, a, b, c_], indices)
        first[:, :, nu, rho, sigma] = _alternate(torsion_side, indices) - cyclic[:, :, nu, rho, sigma]
        second[:, nu, rho, sigma] = _alternate(transported_curvature, indices) \
            - _alternate(curvature_transported, indices)
    torsion_free = backend.is_zero(q, tolerance)
    isometries, preserve, reconstruction = {}, None, None
    if m is not None:
        if m.lattice is not lattice:
            raise CoordinatesException("metric and connection live on different lattices")
        isometries, preserve, reconstruction = _isometries(c, kappa, r, m, tolerance)
    report = BianchiReport(first, second, cyclic, torsion_free, isometries, preserve, reconstruction)
    logger.debug("Bianchi identities on %s: holds=%s", lattice.group.name, report.holds(tolerance))
    return report
