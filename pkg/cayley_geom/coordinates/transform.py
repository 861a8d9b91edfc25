import logging
from dataclasses import dataclass
from typing import Any, Callable, List, Sequence, Union

import numpy as np
import sympy

from cayley_geom.calculus import ScalarField
from cayley_geom.connection import Connection
from cayley_geom.metric import MetricField
from cayley_geom.numeric import Backend, NumericException, common_backend
from .christoffel import ChristoffelField, christoffel_from_transport
from .coordinate_system import CoordinateKind, CoordinateSystem, coordinate_system
from .coordinates_exception import CoordinatesException

logger = logging.getLogger(__name__)

CoordinateFunction = Union[ScalarField, sympy.Basic, str, Callable[..., Any]]


def _contract(matrices: np.ndarray, components: np.ndarray, axis: int) -> np.ndarray:
    """new[g, .., i, ..] = sum_j matrices[g, i, j] components[g, .., j, ..] on one index axis."""
    return np.stack([np.moveaxis(np.tensordot(matrices[g], components[g], axes=([1], [axis])), 0, axis)
                     for g in range(components.shape[0])])


def _sample(system: CoordinateSystem, function: CoordinateFunction) -> ScalarField:
    if isinstance(function, ScalarField):
        return function
    if isinstance(function, (sympy.Basic, str)):
        return system.evaluate(function)
    return ScalarField.from_function(system.lattice, lambda g: function(*system.values(g)))


@dataclass(frozen=True, eq=False)
class CoordinateTransform:
    """
    New coordinates y^mu over hypercubic coordinates x^mu, with jacobian[g, mu, nu] = d_{+nu} y^mu
    and inverse[g] its matrix inverse, (J^-1)^mu_nu = d^y_{+nu} x^mu.
    """
    source: CoordinateSystem
    target: CoordinateSystem
    jacobian: np.ndarray
    inverse: np.ndarray

    @property
    def lattice(self):
        return self.source.lattice

    @property
    def kappa(self):
        return self.source.kappa

    def _matrices(self, upper: bool, restore: bool) -> np.ndarray:
        if upper:
            return self.inverse if restore else self.jacobian
        return self.jacobian.swapaxes(1, 2) if restore else self.inverse.swapaxes(1, 2)

    def transform_tensor(self, components: np.ndarray, upper: int = 0, restore: bool = False) -> np.ndarray:
        """
        Homogeneous law for components[g, i1, .., ik] whose first `upper` indices are contravariant:
        J on upper indices, J^-T on lower ones (and the inverse matrices when restoring).
        """
        backend = common_backend(components, self.jacobian)
        result = backend.convert(components)
        for axis in range(components.ndim - 1):
            result = _contract(backend.convert(self._matrices(axis < upper, restore)), result, axis)
        return result

    def metric_components(self, m: MetricField) -> np.ndarray:
        """g_{mu nu} in the x coordinates, m / kappa^2 because dx^mu = kappa theta^mu."""
        backend = common_backend(m.values, self.jacobian)
        kappa = backend.scalar(self.kappa)
        return backend.convert(m.values) / (kappa * kappa)

    def transform_metric(self, m: MetricField) -> np.ndarray:
        """g'_{mu nu}(y) = sum (J^-1)^rho_mu (J^-1)^sigma_nu g_{rho sigma}(x)"""
        return self.transform_tensor(self.metric_components(m))

    def restore_metric(self, components: np.ndarray) -> np.ndarray:
        return self.transform_tensor(components, restore=True)

    def partial_derivatives(self, f: ScalarField) -> List[ScalarField]:
        """d^y_{+nu} f = sum_mu (J^-1)^mu_nu d_{+mu} f"""
        partials = np.stack([p.values for p in self.source.partial_derivatives(f)], axis=1)
        transformed = self.transform_tensor(partials)
        return [ScalarField(self.lattice, transformed[:, mu].copy()) for mu in range(self.target.dimension)]

    def transform_connection(self, c: Connection) -> np.ndarray:
        """
        V'_mu(y) = sum_nu (J^-1)^nu_mu(x) J(x) V_nu(x) J^-1(x + kappa nu), indexed [mu, g].
        The shifted inverse makes the law non-local.
        """
        lattice = self.lattice
        backend = common_backend(c.matrices, self.jacobian)
        matrices = backend.convert(c.matrices)
        jacobian, inverse = backend.convert(self.jacobian), backend.convert(self.inverse)
        n = lattice.n
        carried = np.stack([np.stack([jacobian[g].dot(matrices[nu, g]).dot(inverse[lattice.site_after(g, nu)])
                                      for g in range(lattice.sites)]) for nu in range(n)])
        result = backend.zeros((n, lattice.sites, n, n))
        for mu in range(n):
            for nu in range(n):
                result[mu] = result[mu] + inverse[:, nu, mu][:, None, None] * carried[nu]
        return result

    def restore_connection(self, transported: np.ndarray) -> Connection:
        """Inverts transform_connection: V_nu = J^-1 (sum_mu J^mu_nu V'_mu) J(x + kappa nu)."""
        lattice = self.lattice
        backend = common_backend(transported, self.jacobian)
        transported = backend.convert(transported)
        jacobian, inverse = backend.convert(self.jacobian), backend.convert(self.inverse)
        n = lattice.n
        result = backend.zeros((n, lattice.sites, n, n))
        for nu in range(n):
            carried = sum(jacobian[:, mu, nu][:, None, None] * transported[mu] for mu in range(n))
            result[nu] = np.stack([inverse[g].dot(carried[g]).dot(jacobian[lattice.site_after(g, nu)])
                                   for g in range(lattice.sites)])
        return Connection(lattice, result)

    def theta_weights(self) -> np.ndarray:
        """theta = (1/kappa) sum_mu theta'_mu dy^mu with theta'_mu = sum_nu (J^-1)^nu_mu, indexed [g, mu]."""
        return self.inverse.sum(axis=1)

    def christoffel(self, c: Connection) -> ChristoffelField:
        """Christoffel symbols read off V' in the y coordinates."""
        transported = self.transform_connection(c)
        theta = Backend.of(transported).convert(self.theta_weights())
        return christoffel_from_transport(self.lattice, self.kappa, transported, theta)


def transform_coordinates(system: CoordinateSystem, functions: Sequence[CoordinateFunction]) -> CoordinateTransform:
    """
    New coordinates y^mu given as scalar fields, sympy expressions in x1..xn, or callables of the
    coordinate values.
    """
    if system.kind != CoordinateKind.HYPERCUBIC:
        raise CoordinatesException("coordinate transformations start from hypercubic coordinates")
    lattice = system.lattice
    fields = [_sample(system, f) for f in functions]
    target = coordinate_system(lattice, fields, CoordinateKind.TRANSFORMED, system.kappa)
    jacobian = target.jacobian / system.kappa
    try:
        inverse = np.stack([target.backend.inv(jacobian[g]) for g in range(lattice.sites)])
    except NumericException:
        raise CoordinatesException("jacobian of the new coordinates is singular")
    logger.debug("transformed coordinates on %s", lattice.group.name)
    return CoordinateTransform(system, target, jacobian, inverse)
