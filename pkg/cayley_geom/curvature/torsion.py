import logging

import numpy as np

from cayley_geom.connection import Connection
from cayley_geom.lattice import GroupLattice, PairKind
from .sector_components import SectorComponents

logger = logging.getLogger(__name__)


class TorsionComponents(SectorComponents):
    """Torsion Q^h on every cap, indexed [g, a, c, h]."""

    def vector(self, a: int, c: int) -> np.ndarray:
        """The torsion vector sum_h Q^h l_h of one cap (arrow elements), per site."""
        return self.component(a, c)


def torsion_raw(lattice: GroupLattice, c: Connection) -> np.ndarray:
    backend = c.backend
    n = lattice.n
    eye = backend.eye(n)
    raw = backend.zeros((lattice.sites, n, n, n))
    for a in range(n):
        for cap in range(n):
            pair = lattice.cap_class(a, cap)
            value = eye[a] + c.matrices[a][:, :, lattice.ad_inverse(a, cap)]
            if pair.kind == PairKind.TRIANGLE:
                value = value - eye[pair.apex]
            raw[:, a, cap] = value
    return raw


def torsion(lattice: GroupLattice, c: Connection) -> TorsionComponents:
    result = TorsionComponents.from_raw(lattice, torsion_raw(lattice, c))
    logger.debug("torsion of %s: max component %s", lattice.group.name, result.max_abs())
    return result
