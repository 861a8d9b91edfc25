import logging
from dataclasses import dataclass

import numpy as np

from cayley_geom.calculus import ScalarField, gauge_fix_array
from cayley_geom.connection import Connection, Coframe, build_coframe, frame_connection
from cayley_geom.lattice import GroupLattice, PairKind
from cayley_geom.metric import MetricField, validate_metric
from cayley_geom.numeric import Backend
from .curvature import curvature
from .curvature_exception import CurvatureException
from .ricci import ricci, curvature_scalar

logger = logging.getLogger(__name__)


def frame_transfer(lattice: GroupLattice, cf: Coframe, product: int) -> np.ndarray:
    """E_(g)^a_b = sum_h' (R*_g E^a_h') E-bar^{g h' g^-1}_b at every site, for g = product."""
    permutation = lattice.adjoint_permutation(product)
    result = []
    for s in range(lattice.sites):
        moved = np.empty_like(cf.e[s])
        moved[:, permutation] = cf.e[lattice.group.mul(s, product)]
        result.append(moved.dot(cf.e_inverse[s]))
    return np.stack(result)


def frame_curvature(lattice: GroupLattice, cf: Coframe, c: Connection) -> np.ndarray:
    """
    Curvature in the coframe, [g, a, c, A, B] with the cap a, c and frame indices A, B,
    built from L_h alone; quadrangle entries are canonical.
    """
    frame = frame_connection(lattice, cf, c)
    backend = Backend.of(frame)
    n = lattice.n
    eye = backend.eye(n)
    raw = backend.zeros((lattice.sites, n, n, n, n))
    for a in range(n):
        for cap in range(n):
            pair = lattice.cap_class(a, cap)
            k = lattice.ad_inverse(a, cap)
            shifted = frame[k][lattice.shift(a)]
            value = np.stack([frame[a, g].dot(shifted[g]) for g in range(lattice.sites)])
            if pair.kind == PairKind.BIANGLE:
                raw[:, a, cap] = value - eye
                continue
            if pair.kind == PairKind.TRIANGLE:
                value = value - frame[pair.apex]
            transfer = frame_transfer(lattice, cf, pair.product)
            raw[:, a, cap] = np.stack([value[g].dot(transfer[g]) for g in range(lattice.sites)])
    return gauge_fix_array(lattice, raw)


@dataclass(frozen=True, eq=False)
class EinsteinHilbertDensity:
    """Both sides of the density identity, evaluated independently."""
    frame_density: ScalarField
    scalar_density: ScalarField


def einstein_hilbert_density(lattice: GroupLattice, m: MetricField, c: Connection) -> EinsteinHilbertDensity:
    """
    frame_density: det E times the frame contraction sum eta^{BD} R^C_{B,C,D} of the coframe
    curvature, with cap indices moved to the frame by E-bar.
    scalar_density: R sqrt(det g) from the curvature scalar.
    """
    if lattice.n != 2:
        raise CurvatureException(f"density identity needs two arrows, lattice has {lattice.n}")
    if validate_metric(lattice, m).value != (2, 0):
        raise CurvatureException("density identity needs a positive definite metric")
    cf = build_coframe(lattice, m)
    components = Backend.FLOAT.convert(frame_curvature(lattice, cf, c))
    e = Backend.FLOAT.convert(cf.e)
    e_inverse = Backend.FLOAT.convert(cf.e_inverse)
    eta = Backend.FLOAT.convert(cf.eta)
    frame_values = []
    for g in range(lattice.sites):
        # R^C_{B, cap C', cap D'} -> all frame indices at g
        full = np.einsum("acAB,aC,cD->CDAB", components[g], e_inverse[g], e_inverse[g])
        contracted = np.einsum("BD,CDCB->", eta, full)
        frame_values.append(np.linalg.det(e[g]) * contracted)

    values = Backend.FLOAT.convert(m.values)
    scalar = curvature_scalar(lattice, m, ricci(lattice, curvature(lattice, c)).ricci)
    scalar_values = Backend.FLOAT.convert(scalar.values) * np.sqrt(np.linalg.det(values))
    logger.debug("density identity on %s evaluated at %d sites", lattice.group.name, lattice.sites)
    return EinsteinHilbertDensity(ScalarField(lattice, np.array(frame_values)),
                                  ScalarField(lattice, scalar_values))
