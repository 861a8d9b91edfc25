import logging
from dataclasses import dataclass
from typing import Any

import numpy as np

from cayley_geom.calculus import ScalarField
from cayley_geom.connection import Connection
from cayley_geom.curvature import curvature, ricci, torsion, transport_product
from cayley_geom.lattice import GroupLattice
from cayley_geom.metric import MetricField
from cayley_geom.numeric import Backend, FLOAT_TOLERANCE, common_backend
from .coordinate_system import parse_spacing
from .coordinates_exception import CoordinatesException

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class ChristoffelField:
    """
    Gamma^mu_{rho nu} = (V^mu_{rho nu} - theta_rho delta^mu_nu) / kappa, held as symbols[g, mu, rho, nu].
    theta[g, rho] are the weights of theta = (1/kappa) sum_rho theta_rho dx^rho, all 1 for
    hypercubic coordinates.
    """
    lattice: GroupLattice
    kappa: Any
    symbols: np.ndarray
    theta: np.ndarray

    @property
    def backend(self) -> Backend:
        return Backend.of(self.symbols)

    def symbol(self, mu: int, rho: int, nu: int) -> ScalarField:
        return ScalarField(self.lattice, self.symbols[:, mu, rho, nu].copy())

    def torsion(self) -> np.ndarray:
        """Q^mu_{nu rho} = Gamma^mu_{nu rho} - Gamma^mu_{rho nu}, indexed [g, mu, nu, rho]."""
        return self.symbols - self.symbols.swapaxes(2, 3)

    def is_zero(self, tolerance: float = FLOAT_TOLERANCE) -> bool:
        return self.backend.is_zero(self.symbols, tolerance)


def christoffel_from_transport(lattice: GroupLattice, kappa: Any, transport: np.ndarray,
                               theta: np.ndarray) -> ChristoffelField:
    """transport[rho, g] is the matrix V_rho in the chosen coordinate basis."""
    backend = Backend.of(transport)
    kappa = parse_spacing(kappa, backend)
    n = lattice.n
    delta = backend.zeros((lattice.sites, n, n, n))
    for mu in range(n):
        for rho in range(n):
            delta[:, mu, rho, mu] = theta[:, rho]
    symbols = (np.transpose(transport, (1, 2, 0, 3)) - delta) / kappa
    return ChristoffelField(lattice, kappa, symbols, theta)


def _check(lattice: GroupLattice):
    if not lattice.is_hypercubic:
        raise CoordinatesException(f"Christoffel symbols need a hypercubic lattice, got {lattice.group.name}")


def christoffel(c: Connection, kappa: Any = 1) -> ChristoffelField:
    lattice = c.lattice
    _check(lattice)
    result = christoffel_from_transport(lattice, kappa, c.matrices, c.backend.ones((lattice.sites, lattice.n)))
    logger.debug("Christoffel symbols on %s with spacing %s", lattice.group.name, result.kappa)
    return result


def coordinate_curvature(c: Connection, kappa: Any = 1) -> np.ndarray:
    """
    R^mu_{nu rho sigma} = (V_rho R*_rho V_sigma - V_sigma R*_sigma V_rho)^mu_nu / kappa^2,
    indexed [g, mu, nu, rho, sigma].
    """
    lattice = c.lattice
    _check(lattice)
    backend = c.backend
    kappa = parse_spacing(kappa, backend)
    n = lattice.n
    result = backend.zeros((lattice.sites, n, n, n, n))
    for rho in range(n):
        for sigma in range(n):
            result[:, :, :, rho, sigma] = (transport_product(lattice, c, rho, sigma)
                                           - transport_product(lattice, c, sigma, rho)) / (kappa * kappa)
    return result


def coordinate_ricci(curvature_components: np.ndarray) -> np.ndarray:
    """Ric_{mu nu} = sum_rho R^rho_{mu rho nu}, indexed [g, mu, nu]."""
    return np.diagonal(curvature_components, axis1=1, axis2=3).sum(axis=-1)


def coordinate_curvature_scalar(lattice: GroupLattice, m: MetricField, curvature_components: np.ndarray,
                                kappa: Any = 1) -> ScalarField:
    """R = sum g^{mu nu} Ric_{mu nu} with the coordinate metric g_{mu nu} = m / kappa^2."""
    backend = common_backend(curvature_components, m.values)
    kappa = parse_spacing(kappa, backend)
    values = backend.convert(m.values)
    ric = coordinate_ricci(backend.convert(curvature_components))
    scalars = [(backend.inv(values[g]) * kappa * kappa * ric[g]).sum() for g in range(lattice.sites)]
    return ScalarField(lattice, backend.array(scalars))


def agrees_with_sector_components(c: Connection, kappa: Any = 1, tolerance: float = FLOAT_TOLERANCE) -> bool:
    """
    On a hypercubic lattice the canonical quadrangle components are the antisymmetrized coordinate
    ones: Q(nu, rho) = kappa Q^._{nu rho}, R(rho, sigma) = kappa^2 R_{rho sigma}, Ric = kappa^2 Ric.
    """
    lattice = c.lattice
    field = christoffel(c, kappa)
    backend = field.backend
    kappa = field.kappa
    q = torsion(lattice, c).canonical
    cc = curvature(lattice, c)
    coordinate = coordinate_curvature(c, kappa)
    torsion_matches = backend.equal(np.transpose(q, (0, 3, 1, 2)), field.torsion() * kappa, tolerance)
    curvature_matches = backend.equal(np.transpose(cc.canonical, (0, 3, 4, 1, 2)),
                                      coordinate * kappa * kappa, tolerance)
    ricci_matches = backend.equal(ricci(lattice, cc).ricci, coordinate_ricci(coordinate) * kappa * kappa,
                                  tolerance)
    return torsion_matches and curvature_matches and ricci_matches
