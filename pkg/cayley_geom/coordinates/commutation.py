from dataclasses import dataclass
from typing import List, Optional

import numpy as np

from cayley_geom.calculus import OneForm, ScalarField, commutator
from cayley_geom.numeric import Backend, FLOAT_TOLERANCE, common_backend
from .coordinate_system import CoordinateKind, CoordinateSystem
from .z4 import z4_structure


@dataclass(frozen=True, eq=False)
class CommutationReport:
    """
    structure[g, mu, nu, rho] holds the coefficients of [dx^mu, x^nu] = sum_rho C dx^rho,
    expected the ones the coordinate kind predicts.
    """
    system: CoordinateSystem
    structure: np.ndarray
    expected: np.ndarray

    @property
    def backend(self) -> Backend:
        return common_backend(self.structure, self.expected)

    def relation(self, mu: int, nu: int) -> OneForm:
        system = self.system
        return system.expand([ScalarField(system.lattice, self.structure[:, mu, nu, rho].copy())
                              for rho in range(system.dimension)])

    def deviating_sites(self, tolerance: float = FLOAT_TOLERANCE) -> List[int]:
        backend = self.backend
        return [g for g in range(self.system.lattice.sites)
                if not backend.equal(self.structure[g], self.expected[g], tolerance)]

    def holds(self, mask: Optional[np.ndarray] = None, tolerance: float = FLOAT_TOLERANCE) -> bool:
        """True if the relations hold on every site, or on the sites selected by mask."""
        return not [g for g in self.deviating_sites(tolerance) if mask is None or mask[g]]


def structure_constants(system: CoordinateSystem) -> np.ndarray:
    lattice = system.lattice
    forms = system.differentials()
    inverse = system.inverse_jacobian
    n = system.dimension
    result = system.backend.zeros((lattice.sites, n, n, n))
    for mu in range(n):
        for nu in range(n):
            coefficients = commutator(lattice, forms[mu], system.fields[nu]).coefficients
            result[:, mu, nu] = np.stack([coefficients[g].dot(inverse[g]) for g in range(lattice.sites)])
    return result


def expected_structure(system: CoordinateSystem) -> np.ndarray:
    """
    hypercubic   [dx^mu, x^nu] = kappa delta^{mu nu} dx^mu
    transformed  [dy^mu, y^nu] = kappa sum_rho C^{mu nu}_rho dy^rho,
                 C^{mu nu}_rho = sum_s J^mu_s J^nu_s (J^-1)^s_rho
    Other systems have no closed form and are compared against themselves.
    """
    if system.kind == CoordinateKind.Z4:
        return z4_structure(system)
    lattice = system.lattice
    n = system.dimension
    backend = system.backend
    if system.kind == CoordinateKind.HYPERCUBIC:
        result = backend.zeros((lattice.sites, n, n, n))
        for mu in range(n):
            result[:, mu, mu, mu] = system.kappa
        return result
    if system.kind == CoordinateKind.TRANSFORMED:
        kappa = system.kappa
        jacobian = system.jacobian / kappa
        inverse = system.inverse_jacobian * kappa
        result = backend.zeros((lattice.sites, n, n, n))
        for g in range(lattice.sites):
            for mu in range(n):
                for nu in range(n):
                    result[g, mu, nu] = kappa * (jacobian[g, mu] * jacobian[g, nu]).dot(inverse[g])
        return result
    return structure_constants(system)


def commutation_check(system: CoordinateSystem) -> CommutationReport:
    return CommutationReport(system, structure_constants(system), expected_structure(system))
