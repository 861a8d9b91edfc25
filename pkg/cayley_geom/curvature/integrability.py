import logging
from dataclasses import dataclass, field
from typing import Dict, Tuple

import numpy as np

from cayley_geom.calculus import gauge_fix_array
from cayley_geom.connection import Connection, inverse_transport, is_compatible
from cayley_geom.lattice import GroupLattice, PairKind
from cayley_geom.metric import MetricField
from cayley_geom.numeric import FLOAT_TOLERANCE
from .curvature import shifted_columns
from .curvature_exception import CurvatureException
from .sector_components import transport_product

logger = logging.getLogger(__name__)

Pair = Tuple[int, int]


@dataclass(frozen=True, eq=False)
class IntegrabilityIsometries:
    """
    Per-site isometries of g(g) behind the curvature, keyed by transport pairs (h1, h2) of
    arrow positions:
    biangle     V_{h1} R*_{h1} V_{h2} = B
    triangle    V_{h1} R*_{h1} V_{h2} = T V_{h1 h2}
    quadrangle  V_{h1} R*_{h1} V_{h2} = K V_{h1^} R*_{h1^} V_{h2^}, keyed ((h1, h2), (h1^, h2^))
    """
    lattice: GroupLattice
    biangle: Dict[Pair, np.ndarray] = field(default_factory=dict)
    triangle: Dict[Pair, np.ndarray] = field(default_factory=dict)
    quadrangle: Dict[Tuple[Pair, Pair], np.ndarray] = field(default_factory=dict)
    all_isometries: bool = True


def _preserves(m: MetricField, matrices: np.ndarray, tolerance: float) -> bool:
    backend = m.backend
    return all(backend.equal(matrices[g].T.dot(m.at(g)).dot(matrices[g]), m.at(g), tolerance)
               for g in range(matrices.shape[0]))


def integrability_isometries(lattice: GroupLattice, m: MetricField, c: Connection,
                             tolerance: float = FLOAT_TOLERANCE) -> IntegrabilityIsometries:
    if not is_compatible(lattice, m, c, tolerance):
        raise CurvatureException("integrability isometries need a metric-compatible connection")
    inverse = inverse_transport(lattice, c)
    products = {(i, j): transport_product(lattice, c, i, j) for i in range(lattice.n) for j in range(lattice.n)}
    sites = range(lattice.sites)
    biangle, triangle, quadrangle = {}, {}, {}
    for (i, j), product in products.items():
        pair = lattice.classify_pair(i, j)
        if pair.kind == PairKind.BIANGLE:
            biangle[(i, j)] = product
        elif pair.kind == PairKind.TRIANGLE:
            triangle[(i, j)] = np.stack([product[g].dot(inverse[pair.apex, g]) for g in sites])
    for chain in lattice.chains.values():
        for first in chain:
            for second in chain:
                if first == second:
                    continue
                other = products[second]
                inverted = [c.backend.inv(other[s]) for s in sites]
                quadrangle[(first, second)] = np.stack([products[first][s].dot(inverted[s]) for s in sites])
    all_isometries = all(_preserves(m, matrices, tolerance)
                         for sector in (biangle, triangle, quadrangle) for matrices in sector.values())
    if not all_isometries:
        logger.warning("integrability matrices are not isometries of the metric")
    return IntegrabilityIsometries(lattice, biangle, triangle, quadrangle, all_isometries)


def reconstruct_curvature(lattice: GroupLattice, c: Connection, isometries: IntegrabilityIsometries) -> np.ndarray:
    """
    Canonical curvature components [g, a, c, h, h'] rebuilt from (B - I), (T - I) V and
    (K - I) V^ R* V^, each quadrangle taken relative to the first pair of its chain.
    """
    backend = c.backend
    n = lattice.n
    eye = backend.eye(n)
    raw = backend.zeros((lattice.sites, n, n, n, n))
    for a in range(n):
        for cap in range(n):
            transport_pair = (a, lattice.ad_inverse(a, cap))
            pair = lattice.cap_class(a, cap)
            if pair.kind == PairKind.BIANGLE:
                value = isometries.biangle[transport_pair] - eye
            elif pair.kind == PairKind.TRIANGLE:
                t = isometries.triangle[transport_pair]
                value = np.stack([(t[g] - eye).dot(c.matrices[pair.apex, g]) for g in range(lattice.sites)])
            else:
                reference = lattice.chain(pair.product)[0]
                if transport_pair == reference:
                    value = backend.zeros((lattice.sites, n, n))
                else:
                    k = isometries.quadrangle[(transport_pair, reference)]
                    base = transport_product(lattice, c, *reference)
                    value = np.stack([(k[g] - eye).dot(base[g]) for g in range(lattice.sites)])
            raw[:, a, cap] = value[:, :, shifted_columns(lattice, pair.product)]
    return gauge_fix_array(lattice, raw)
