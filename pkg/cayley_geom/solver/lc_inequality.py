import itertools
import logging
from dataclasses import dataclass
from typing import Any, List, Tuple

import numpy as np

from cayley_geom.lattice import GroupLattice
from cayley_geom.metric import MetricField, validate_metric
from cayley_geom.numeric import Backend, FLOAT_TOLERANCE, exact_sqrt
from .solver_exception import SolverException

logger = logging.getLogger(__name__)

Pair = Tuple[int, int]


@dataclass(frozen=True)
class QuadrangleInequality:
    """
    |sqrt(X) - sqrt(Y)| <= sqrt(D) <= sqrt(X) + sqrt(Y) for two pairs (h1, h2), (h1^, h2^) of a chain at
    one site, X = g_{h2,h2}(g h1), Y = g_{h2^,h2^}(g h1^), D the squared length of l_{h1} - l_{h1^}.
    """
    site: int
    product: int
    pairs: Tuple[Pair, Pair]
    lower: float
    middle: float
    upper: float
    holds: bool


@dataclass(frozen=True, eq=False)
class InequalityReport:
    checks: List[QuadrangleInequality]

    @property
    def holds(self) -> bool:
        return all(check.holds for check in self.checks)

    @property
    def failures(self) -> List[int]:
        return sorted({check.site for check in self.checks if not check.holds})


def _require_positive_definite(lattice: GroupLattice, m: MetricField):
    if not validate_metric(lattice, m).is_riemannian:
        raise SolverException("existence inequality needs a positive definite metric")


def _lengths(lattice: GroupLattice, m: MetricField, g: int, first: Pair, second: Pair) -> Tuple[Any, Any, Any]:
    (i, j), (k, l) = first, second
    values = m.values
    x = values[lattice.site_after(g, i), j, j]
    y = values[lattice.site_after(g, k), l, l]
    d = values[g, i, i] + values[g, k, k] - 2 * values[g, i, k]
    return x, y, d


def lc_existence_inequality(lattice: GroupLattice, m: MetricField,
                            tolerance: float = FLOAT_TOLERANCE) -> InequalityReport:
    """Triangle inequalities a torsion-free compatible connection needs on every quadrangle chain."""
    _require_positive_definite(lattice, m)
    backend = m.backend
    checks = []
    for g in range(lattice.sites):
        for product, chain in sorted(lattice.chains.items()):
            for first, second in itertools.combinations(chain, 2):
                x, y, d = _lengths(lattice, m, g, first, second)
                # squared form of both bounds
                slack = 4 * x * y - (x + y - d) ** 2
                holds = slack >= 0 if backend is Backend.EXACT else float(slack) >= -tolerance
                root_x, root_y = np.sqrt(float(x)), np.sqrt(float(y))
                checks.append(QuadrangleInequality(g, product, (first, second), abs(root_x - root_y),
                                                   float(np.sqrt(float(d))), root_x + root_y, bool(holds)))
    report = InequalityReport(checks)
    logger.debug("existence inequality on %s: %d checks, failures at %s", lattice.group.name, len(checks),
                 report.failures)
    return report


def quadrangle_closures(lattice: GroupLattice, m: MetricField, site: int, product: int,
                        tolerance: float = FLOAT_TOLERANCE) -> List[np.ndarray]:
    """
    The vectors V_{h1,h2} at a site closing the quadrangle of the given product, for two arrows:
    w with |w| and |w + l_{h1} - l_{h1^}| fixed by the metric, i.e. the intersections of two circles.
    """
    if lattice.n != 2:
        raise SolverException(f"quadrangle closures need two arrows, lattice has {lattice.n}")
    _require_positive_definite(lattice, m)
    chain = lattice.chain(product)
    if len(chain) != 2:
        raise SolverException(f"quadrangle {lattice.group.label(product)} has {len(chain)} pairs, closures need 2")
    first, second = chain
    backend = m.backend
    metric = m.at(site)
    x, y, _ = _lengths(lattice, m, site, first, second)
    e = backend.zeros(2)
    e[first[0]] = backend.scalar(1)
    e[second[0]] = backend.scalar(-1)
    ge = metric.dot(e)
    f = np.array([-ge[1], ge[0]], dtype=ge.dtype)
    length_e = e.dot(ge)
    beta = (y - x - length_e) / 2
    alpha = beta / length_e
    discriminant = (x - beta * beta / length_e) / f.dot(metric).dot(f)
    centre = alpha * e
    if backend.is_zero_scalar(discriminant, tolerance):
        return [centre]
    if discriminant < 0:
        return []
    if backend is Backend.EXACT:
        s = exact_sqrt(discriminant)
        if s is not None:
            return [centre + s * f, centre - s * f]
        logger.warning("quadrangle closure at %s needs an irrational square root, using floats",
                       lattice.site_label(site))
        centre, f = Backend.FLOAT.convert(centre), Backend.FLOAT.convert(f)
    s = np.sqrt(float(discriminant))
    return [centre + s * f, centre - s * f]
