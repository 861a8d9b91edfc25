from typing import Sequence

import numpy as np

from cayley_geom.lattice import GroupLattice
from .connection import Connection
from .connection_exception import ConnectionException


def transport_matrix(lattice: GroupLattice, c: Connection, base: int, path: Sequence[int]) -> np.ndarray:
    """
    V_{h1}(g) V_{h2}(g h1) ... V_{hr}(g h1 ... h_{r-1}) for a path of arrow positions.
    Column h' holds the components at the base of the basis vector l_{h'} at the end of the path.
    """
    result = c.backend.eye(lattice.n)
    site = base
    for i in path:
        result = result.dot(c.matrices[i, site])
        site = lattice.site_after(site, i)
    return result


def backward_transport(lattice: GroupLattice, c: Connection, base: int, path: Sequence[int],
                       target: int) -> np.ndarray:
    """
    Components at the base site of l_target transported back along a path of arrow elements.
    A single step gives V~_{l_h} l_h' = sum_h'' V^{h''}_{h,h'} l_h''.
    """
    if not path:
        raise ConnectionException("transport path must not be empty")
    positions = [lattice.position(h) for h in path]
    return transport_matrix(lattice, c, base, positions)[:, lattice.position(target)]
