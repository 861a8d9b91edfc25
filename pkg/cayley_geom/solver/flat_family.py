from typing import Any, List, Tuple

import sympy

from cayley_geom.connection import Connection
from cayley_geom.lattice import GroupLattice, build_group, classify
from cayley_geom.metric import MetricField
from cayley_geom.numeric import Backend
from .solver_exception import SolverException


def z4_lattice() -> GroupLattice:
    return classify(build_group("cyclic:4"), [1, 2])


def z4_step(p: Any, q: Any) -> Tuple[Any, Any]:
    """(R1* p, R1* q) of a Levi-Civita connection on the Z4 lattice with arrows 1, 2."""
    d = 1 + p + q
    return -p / d, -(2 + p + q) / d


def flat_family_functions(p0: Any, q0: Any) -> Tuple[List[sympy.Rational], List[sympy.Rational]]:
    """p and q at the sites 0..3."""
    p, q = Backend.EXACT.scalar(p0), Backend.EXACT.scalar(q0)
    for name, denominator in (("1+p+q", 1 + p + q), ("1+p", 1 + p), ("1+q", 1 + q)):
        if denominator == 0:
            raise SolverException(f"flat family excludes {name} = 0")
    ps = [p, -p / (1 + p + q), -p / (1 + p), p / (1 + q)]
    qs = [q, -(2 + p + q) / (1 + p + q), q / (1 + p), -(2 + p + q) / (1 + q)]
    return ps, qs


def _metric_values(p: Any, q: Any, a: Any, b: Any, c: Any) -> List[List[List[Any]]]:
    a1, b1, c1 = a - 2 * b + c, -p * a + (p - 1 - q) * b + (1 + q) * c, \
        p ** 2 * a + 2 * p * (1 + q) * b + (1 + q) ** 2 * c
    a2, b2, c2 = (1 + p) ** 2 * a + 2 * q * (1 + p) * b + q ** 2 * c, -(1 + p) * b - q * c, c
    a3 = (1 + p) ** 2 * a + 2 * (1 + p) * (1 + q) * b + (1 + q) ** 2 * c
    b3 = p * (1 + p) * a + (1 + 2 * p) * (1 + q) * b + (1 + q) ** 2 * c
    c3 = p ** 2 * a + 2 * p * (1 + q) * b + (1 + q) ** 2 * c
    return [[[x, y], [y, z]] for x, y, z in ((a, b, c), (a1, b1, c1), (a2, b2, c2), (a3, b3, c3))]


def flat_family_z4(p0: Any, q0: Any, a0: Any, b0: Any, c0: Any) -> Tuple[MetricField, Connection]:
    """
    The Levi-Civita geometries of the Z4 lattice with arrows 1, 2 generated from the values of p, q
    and the metric entries a, b, c at site 0. V1 = [[-1, p], [1, 1+q]], V2 = [[1+p, 0], [q, -1]].
    """
    lattice = z4_lattice()
    ps, qs = flat_family_functions(p0, q0)
    a, b, c = (Backend.EXACT.scalar(x) for x in (a0, b0, c0))
    if a * c - b * b == 0:
        raise SolverException("flat family needs an invertible metric at site 0")
    metric = MetricField.per_site(lattice, _metric_values(ps[0], qs[0], a, b, c))
    v1 = [[[-1, p], [1, 1 + q]] for p, q in zip(ps, qs)]
    v2 = [[[1 + p, 0], [q, -1]] for p, q in zip(ps, qs)]
    return metric, Connection.per_site(lattice, [v1, v2])
