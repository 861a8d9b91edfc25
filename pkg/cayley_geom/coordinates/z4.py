import logging
from typing import Dict, Tuple

import numpy as np

from cayley_geom.calculus import OneForm, ScalarField, differential, pullback
from cayley_geom.lattice import build_group, classify
from cayley_geom.numeric import Backend
from .coordinate_system import CoordinateKind, CoordinateSystem, coordinate_system
from .coordinates_exception import CoordinatesException

logger = logging.getLogger(__name__)


def _rational(p: int, q: int = 2):
    return Backend.EXACT.scalar(f"{p}/{q}")


def z4_identities(system: CoordinateSystem) -> Dict[str, bool]:
    """The algebraic relations the coordinates x, y on (Z4, {1,2}) satisfy."""
    lattice = system.lattice
    x, y = system.fields
    one = ScalarField.constant(lattice, 1)
    theta1, theta2 = OneForm.basis(lattice, 1), OneForm.basis(lattice, 2)
    dx, dy = differential(lattice, x), differential(lattice, y)
    jacobian = np.stack([np.array([[-2 * x[g], 0], [(x[g] - 1) * y[g], -2 * y[g]]], dtype=object)
                         for g in range(lattice.sites)])
    return {
        "x^2 = 1": (x * x).equals(one),
        "y^2 = 1": (y * y).equals(one),
        "R*_1 x = -x": pullback(lattice, 1, x).equals(-x),
        "R*_2 x = x": pullback(lattice, 2, x).equals(x),
        "R*_1 y = xy": pullback(lattice, 1, y).equals(x * y),
        "R*_2 y = -y": pullback(lattice, 2, y).equals(-y),
        "(l_h x^mu) = [[-2x, 0], [(x-1)y, -2y]]": Backend.EXACT.equal(system.jacobian, jacobian),
        "dx = -2x theta^1": dx.equals(theta1.scaled(x * -2)),
        "dy = (x-1)y theta^1 - 2y theta^2": dy.equals(theta1.scaled((x - 1) * y) - theta2.scaled(y * 2)),
        "theta^1 = -dx/(2x)": theta1.equals(dx.scaled(x * _rational(-1))),
        "theta^2 = (x-1)dx/4 - dy/(2y)": theta2.equals(dx.scaled((x - 1) * _rational(1, 4))
                                                       - dy.scaled(y * _rational(1))),
    }


def z4_coordinates() -> CoordinateSystem:
    """x = e^0 - e^1 + e^2 - e^3 and y = e^0 + e^1 - e^2 - e^3 on (Z4, {1,2})."""
    lattice = classify(build_group("cyclic:4"), [1, 2])
    e = [ScalarField.indicator(lattice, g) for g in range(lattice.sites)]
    x = e[0] - e[1] + e[2] - e[3]
    y = e[0] + e[1] - e[2] - e[3]
    system = coordinate_system(lattice, [x, y], CoordinateKind.Z4)
    failed = [name for name, holds in z4_identities(system).items() if not holds]
    if failed:
        raise CoordinatesException(f"Z4 coordinates violate {failed[0]}")
    return system


def z4_partial_derivatives(system: CoordinateSystem, f: ScalarField) -> Tuple[ScalarField, ScalarField]:
    """
    d_x f = (f(x, xy) - f(-x, xy)) / (2x)
    d_y f = (f(x, y) - f(x, -y)) / (2y)
    """
    if system.kind != CoordinateKind.Z4:
        raise CoordinatesException("closed-form partial derivatives exist only for the Z4 coordinates")
    dfx, dfy = [], []
    for g in range(system.lattice.sites):
        x, y = system.values(g)
        dfx.append((f[system.site_of((x, x * y))] - f[system.site_of((-x, x * y))]) / (2 * x))
        dfy.append((f[g] - f[system.site_of((x, -y))]) / (2 * y))
    backend = f.backend
    return ScalarField(system.lattice, backend.array(dfx)), ScalarField(system.lattice, backend.array(dfy))


def z4_structure(system: CoordinateSystem) -> np.ndarray:
    """
    Structure constants of [dx, x] = -2x dx, [dy, y] = -2y dy and [dx, y] = [dy, x] = (x-1)y dx,
    indexed [g, mu, nu, rho].
    """
    result = Backend.EXACT.zeros((system.lattice.sites, 2, 2, 2))
    for g in range(system.lattice.sites):
        x, y = system.values(g)
        result[g, 0, 0, 0] = -2 * x
        result[g, 1, 1, 1] = -2 * y
        result[g, 0, 1, 0] = (x - 1) * y
        result[g, 1, 0, 0] = (x - 1) * y
    return result
