import logging
from collections import deque
from typing import Any, Callable, Optional

import numpy as np

from cayley_geom.lattice import GroupLattice
from cayley_geom.numeric import Backend, FLOAT_TOLERANCE
from .metric_exception import MetricException
from .metric_field import MetricField

logger = logging.getLogger(__name__)

Transport = Callable[[int, int], np.ndarray]


def propagate(lattice: GroupLattice, seed: Any, transport: Transport, base: Optional[int] = None,
              backend: Optional[Backend] = None, tolerance: float = FLOAT_TOLERANCE) -> MetricField:
    """
    Breadth-first propagation g(g h) = V_h(g)^T g(g) V_h(g) from the base site, where
    transport(g, i) returns V_{h_i}(g). Every revisited site must receive the same matrix.
    """
    if backend is None:
        backend = Backend.of(seed) if isinstance(seed, np.ndarray) else Backend.EXACT
    seed = backend.array(seed)
    if seed.shape != (lattice.n, lattice.n):
        raise MetricException(f"seed must be {lattice.n}x{lattice.n}, got shape {seed.shape}")
    if not backend.equal(seed, seed.T, tolerance):
        raise MetricException("seed metric is not symmetric")
    if base is None:
        base = lattice.group.identity

    values: list = [None] * lattice.sites
    values[base] = seed
    queue = deque([base])
    while queue:
        g = queue.popleft()
        for i in range(lattice.n):
            v = transport(g, i)
            image = v.T.dot(values[g]).dot(v)
            target = lattice.site_after(g, i)
            if values[target] is None:
                values[target] = image
                queue.append(target)
                logger.debug("propagated metric from %s to %s", lattice.site_label(g), lattice.site_label(target))
            elif not backend.equal(values[target], image, tolerance):
                raise MetricException(
                    f"inconsistent propagation along arrow {lattice.arrow_label(i)} "
                    f"from {lattice.site_label(g)}", site=lattice.site_label(target))
    unreached = [g for g in range(lattice.sites) if values[g] is None]
    if unreached:
        raise MetricException("arrows do not generate the group, unreachable",
                              site=lattice.site_label(unreached[0]))
    return MetricField(lattice, np.stack(values))
