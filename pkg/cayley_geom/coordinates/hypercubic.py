import logging
from typing import Any, Optional, Sequence

import numpy as np
import sympy

from cayley_geom.calculus import ScalarField
from cayley_geom.lattice import GroupLattice, TorusGroup
from cayley_geom.numeric import Backend
from .coordinate_system import CoordinateKind, CoordinateSystem, coordinate_symbols, coordinate_system, parse_spacing
from .coordinates_exception import CoordinatesException

logger = logging.getLogger(__name__)


def _check_hypercubic(lattice: GroupLattice, what: str):
    if not lattice.is_hypercubic:
        raise CoordinatesException(f"{what} need a hypercubic lattice, got {lattice.group.name}")


def hypercubic_lattice(moduli: Sequence[int]) -> GroupLattice:
    """The torus Z_m1 x .. x Z_mk with the unit generators as arrows."""
    group = TorusGroup(list(moduli))
    return GroupLattice(group, [group.unit(mu) for mu in range(group.dimension)])


def hypercubic_calculus(lattice: GroupLattice, kappa: Any = 1) -> CoordinateSystem:
    """
    x^mu = kappa a^mu on the fundamental domain a^mu in {0, ..., m-1}, with theta^mu = dx^mu / kappa
    and d_{+mu} f = (R*_mu f - f) / kappa.
    """
    _check_hypercubic(lattice, "hypercubic coordinates")
    kappa = parse_spacing(kappa)
    group = lattice.group
    fields = [ScalarField.from_function(lattice, lambda g, mu=mu: kappa * group.coordinates(g)[mu])
              for mu in range(lattice.n)]
    backend = Backend.EXACT
    jacobian = np.stack([backend.eye(lattice.n) * kappa for _ in range(lattice.sites)])
    return coordinate_system(lattice, fields, CoordinateKind.HYPERCUBIC, kappa, jacobian)


def interior_mask(lattice: GroupLattice, steps: int = 1) -> np.ndarray:
    """Sites from which `steps` moves along any single direction stay clear of the torus seam."""
    _check_hypercubic(lattice, "interior masks")
    group = lattice.group
    return np.array([all(a + steps <= m - 1 for a, m in zip(group.coordinates(g), group.moduli))
                     for g in range(lattice.sites)], dtype=bool)


def forward_difference_error(lattice: GroupLattice, expression: Any, kappa: Any, mu: int = 0,
                             symbols: Optional[Sequence[sympy.Symbol]] = None):
    """Largest |d_{+mu} f - df/dx^mu| over the interior sites, for f given as a sympy expression."""
    system = hypercubic_calculus(lattice, kappa)
    symbols = symbols or coordinate_symbols(system.dimension)
    expression = sympy.sympify(expression)
    discrete = system.partial_derivatives(system.evaluate(expression, symbols))[mu]
    analytic = system.evaluate(sympy.diff(expression, symbols[mu]), symbols)
    mask = interior_mask(lattice)
    errors = [abs(discrete[g] - analytic[g]) for g in range(lattice.sites) if mask[g]]
    if not errors:
        raise CoordinatesException(f"{lattice.group.name} has no interior sites")
    return max(errors)
