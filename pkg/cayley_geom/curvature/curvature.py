import logging

import numpy as np

from cayley_geom.connection import Connection
from cayley_geom.lattice import GroupLattice, PairKind
from .sector_components import SectorComponents, transport_product

logger = logging.getLogger(__name__)


class CurvatureComponents(SectorComponents):
    """Curvature R^h_{h'} on every cap, indexed [g, a, c, h, h']."""

    def matrix(self, a: int, c: int) -> np.ndarray:
        """(R^h_{h'}) of the cap of arrow elements a, c, per site."""
        return self.component(a, c)


def shifted_columns(lattice: GroupLattice, product: int) -> np.ndarray:
    """Column h' of a sector matrix is read at ad(product^-1) h'."""
    return lattice.adjoint_permutation(lattice.group.inv(product))


def curvature_raw(lattice: GroupLattice, c: Connection) -> np.ndarray:
    backend = c.backend
    n = lattice.n
    eye = backend.eye(n)
    raw = backend.zeros((lattice.sites, n, n, n, n))
    for a in range(n):
        for cap in range(n):
            pair = lattice.cap_class(a, cap)
            value = transport_product(lattice, c, a, lattice.ad_inverse(a, cap))
            if pair.kind == PairKind.BIANGLE:
                value = value - eye
            elif pair.kind == PairKind.TRIANGLE:
                value = value - c.matrices[pair.apex]
            raw[:, a, cap] = value[:, :, shifted_columns(lattice, pair.product)]
    return raw


def curvature(lattice: GroupLattice, c: Connection) -> CurvatureComponents:
    result = CurvatureComponents.from_raw(lattice, curvature_raw(lattice, c))
    logger.debug("curvature of %s: max component %s", lattice.group.name, result.max_abs())
    return result
