import logging
from dataclasses import dataclass
from typing import Any

import numpy as np

from cayley_geom.calculus import pullback_array
from cayley_geom.lattice import GroupLattice
from cayley_geom.numeric import Backend, NumericException, FLOAT_TOLERANCE, max_abs, signature
from .metric_exception import MetricException
from .metric_field import MetricField
from .propagation import propagate
from .signature import Signature

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class KillingResult:
    holds: bool
    residual: np.ndarray
    max_deviation: float


@dataclass(frozen=True)
class InvarianceClass:
    left_invariant: bool
    right_invariant: bool
    bi_invariant: bool


def _site_signature(matrix: np.ndarray, backend: Backend, tolerance: float):
    if backend is Backend.FLOAT:
        eigenvalues = np.linalg.eigvalsh(matrix.astype(float))
        if np.any(np.abs(eigenvalues) < tolerance):
            raise NumericException("singular matrix")
        return int(np.sum(eigenvalues > 0)), int(np.sum(eigenvalues < 0))
    return signature(matrix, tolerance)


def validate_metric(lattice: GroupLattice, m: MetricField, tolerance: float = FLOAT_TOLERANCE) -> Signature:
    """Checks symmetry and invertibility at every site and returns the per-site signature."""
    backend = m.backend
    per_site = []
    for g in range(lattice.sites):
        matrix = m.at(g)
        if not backend.equal(matrix, matrix.T, tolerance):
            raise MetricException("metric is asymmetric", site=lattice.site_label(g))
        try:
            per_site.append(_site_signature(matrix, backend, tolerance))
        except NumericException:
            raise MetricException("metric is singular", site=lattice.site_label(g))
    result = Signature(tuple(per_site))
    if not result.is_constant:
        logger.warning("metric signature is not constant, no compatible connection exists")
    return result


def killing_check(lattice: GroupLattice, m: MetricField, h: int,
                  tolerance: float = FLOAT_TOLERANCE) -> KillingResult:
    """h generates an isometry iff g(g h)_{h1,h2} = g(g)_{ad(h)h1, ad(h)h2}, i.e. R*_h g = g."""
    residual = pullback_array(lattice, h, m.values) - m.values
    return KillingResult(m.backend.is_zero(residual, tolerance), residual, max_abs(residual))


def permutation_matrix(lattice: GroupLattice, i: int, backend: Backend = Backend.EXACT) -> np.ndarray:
    """P_h with P[a, k] = 1 iff h_a = ad(h_i) h_k."""
    p = backend.zeros((lattice.n, lattice.n))
    for k in range(lattice.n):
        p[lattice.ad(i, k), k] = backend.scalar(1)
    return p


def right_invariant_extension(lattice: GroupLattice, seed: Any, backend: Backend = Backend.EXACT) -> MetricField:
    """The right-invariant metric with the given value at the identity."""
    seed_array = backend.array(seed)
    symbolic = backend is Backend.EXACT and not all(x.is_number for x in seed_array.flat)
    if not symbolic:
        try:
            backend.inv(seed_array)
        except NumericException:
            raise MetricException("seed metric is singular")
    permutations = [permutation_matrix(lattice, i, backend) for i in range(lattice.n)]
    return propagate(lattice, seed_array, lambda g, i: permutations[i], backend=backend)


def invariance_class(lattice: GroupLattice, m: MetricField, tolerance: float = FLOAT_TOLERANCE) -> InvarianceClass:
    left = m.is_constant
    right = all(killing_check(lattice, m, h, tolerance).holds for h in lattice.arrows)
    ad_invariant = all(
        m.backend.equal(m.at(g)[np.ix_(lattice.ad_permutation(i), lattice.ad_permutation(i))], m.at(g), tolerance)
        for g in range(lattice.sites) for i in range(lattice.n))
    return InvarianceClass(left, right, left and right and ad_invariant)


def inverse_metric(lattice: GroupLattice, m: MetricField) -> np.ndarray:
    """The contravariant metric h(g) = g(g)^-1 at every site."""
    backend = m.backend
    result = []
    for g in range(lattice.sites):
        try:
            result.append(backend.inv(m.at(g)))
        except NumericException:
            raise MetricException("metric is singular", site=lattice.site_label(g))
    return np.stack(result)
