import itertools
import logging
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np
import sympy

from cayley_geom.calculus import OneForm, ScalarField, differential
from cayley_geom.lattice import GroupLattice
from cayley_geom.numeric import Backend, FLOAT_TOLERANCE, NumericException, common_backend
from .coordinates_exception import CoordinatesException

logger = logging.getLogger(__name__)


class CoordinateKind(Enum):
    Z4 = "z4"
    HYPERCUBIC = "hypercubic"
    TRANSFORMED = "transformed"
    GENERIC = "generic"


def coordinate_symbols(n: int) -> Tuple[sympy.Symbol, ...]:
    """x1, ..., xn, the names expressions over coordinates are written in."""
    return tuple(sympy.symbols(f"x1:{n + 1}"))


def parse_spacing(kappa: Any, backend: Backend = Backend.EXACT) -> Any:
    try:
        value = backend.scalar(kappa)
    except (NumericException, TypeError, ValueError):
        raise CoordinatesException(f"invalid lattice spacing {kappa!r}")
    if not value > 0:
        raise CoordinatesException(f"lattice spacing must be positive, got {kappa}")
    return value


@dataclass(frozen=True)
class CoordinateValidity:
    collisions: List[Tuple[int, int]] = field(default_factory=list)
    singular_sites: List[int] = field(default_factory=list)

    @property
    def injective(self) -> bool:
        return not self.collisions

    @property
    def valid(self) -> bool:
        return not self.collisions and not self.singular_sites


def _jacobian(lattice: GroupLattice, fields: Sequence[ScalarField]) -> np.ndarray:
    """(l_h x^mu) at every site, indexed [g, mu, h]."""
    return np.stack([differential(lattice, f).coefficients for f in fields], axis=1)


def coordinate_validity(lattice: GroupLattice, fields: Sequence[ScalarField],
                        tolerance: float = FLOAT_TOLERANCE) -> CoordinateValidity:
    """Functions x^mu are coordinates if g -> (x^mu(g)) is injective and (l_h x^mu) is invertible everywhere."""
    if len(fields) != lattice.n:
        raise CoordinatesException(f"need {lattice.n} coordinate functions, got {len(fields)}")
    backend = common_backend(*[f.values for f in fields])
    values = np.stack([backend.convert(f.values) for f in fields], axis=1)
    collisions = [(a, b) for a, b in itertools.combinations(range(lattice.sites), 2)
                  if backend.equal(values[a], values[b], tolerance)]
    jacobian = _jacobian(lattice, [ScalarField(lattice, values[:, mu]) for mu in range(lattice.n)])
    singular = [g for g in range(lattice.sites) if backend.is_zero_scalar(backend.det(jacobian[g]), tolerance)]
    return CoordinateValidity(collisions, singular)


@dataclass(frozen=True, eq=False)
class CoordinateSystem:
    """
    Coordinate functions x^mu with dx^mu = sum_h jacobian[g, mu, h] theta^h.
    Hypercubic systems use jacobian = kappa I everywhere, which is the literal (l_h x^mu) away
    from the seam of the torus.
    """
    lattice: GroupLattice
    fields: Tuple[ScalarField, ...]
    jacobian: np.ndarray
    kind: CoordinateKind = CoordinateKind.GENERIC
    kappa: Any = None

    @property
    def dimension(self) -> int:
        return len(self.fields)

    @property
    def backend(self) -> Backend:
        return Backend.of(self.jacobian)

    def coordinate(self, mu: int) -> ScalarField:
        return self.fields[mu]

    def values(self, g: int) -> Tuple[Any, ...]:
        return tuple(f[g] for f in self.fields)

    @cached_property
    def _sites(self) -> Dict[Tuple[Any, ...], int]:
        return {self.values(g): g for g in range(self.lattice.sites)}

    def site_of(self, values: Sequence[Any]) -> int:
        backend = self.backend
        key = tuple(backend.scalar(v) for v in values)
        if key not in self._sites:
            raise CoordinatesException(f"no site has coordinates {[str(v) for v in values]}")
        return self._sites[key]

    @cached_property
    def inverse_jacobian(self) -> np.ndarray:
        """Indexed [g, h, mu]."""
        backend = self.backend
        try:
            return np.stack([backend.inv(self.jacobian[g]) for g in range(self.lattice.sites)])
        except NumericException:
            raise CoordinatesException("coordinate jacobian is singular")

    def differentials(self) -> List[OneForm]:
        return [OneForm(self.lattice, self.jacobian[:, mu, :].copy()) for mu in range(self.dimension)]

    def partial_derivatives(self, f: ScalarField) -> List[ScalarField]:
        """Left partial derivatives defined by df = sum_mu (d_mu f) dx^mu."""
        lattice = self.lattice
        backend = common_backend(f.values, self.jacobian)
        ell = backend.convert(differential(lattice, f).coefficients)
        inverse = backend.convert(self.inverse_jacobian)
        partials = np.stack([ell[g].dot(inverse[g]) for g in range(lattice.sites)])
        return [ScalarField(lattice, partials[:, mu].copy()) for mu in range(self.dimension)]

    def expand(self, partials: Sequence[ScalarField]) -> OneForm:
        """sum_mu partials[mu] dx^mu"""
        forms = self.differentials()
        result = forms[0].scaled(partials[0])
        for form, partial in zip(forms[1:], partials[1:]):
            result = result + form.scaled(partial)
        return result

    def evaluate(self, expression: Any, symbols: Optional[Sequence[sympy.Symbol]] = None) -> ScalarField:
        """A sympy expression in the coordinates, sampled at every site."""
        symbols = symbols or coordinate_symbols(self.dimension)
        expression = sympy.sympify(expression)
        values = [expression.subs(dict(zip(symbols, self.values(g)))) for g in range(self.lattice.sites)]
        if any(not v.is_number for v in values):
            raise CoordinatesException(f"expression {expression} has symbols besides {list(symbols)}")
        backend = Backend.EXACT if all(v.is_Rational for v in values) else Backend.FLOAT
        return ScalarField(self.lattice, backend.array(values))


def coordinate_system(lattice: GroupLattice, fields: Sequence[ScalarField],
                      kind: CoordinateKind = CoordinateKind.GENERIC, kappa: Any = None,
                      jacobian: Optional[np.ndarray] = None) -> CoordinateSystem:
    validity = coordinate_validity(lattice, fields)
    if validity.collisions:
        a, b = validity.collisions[0]
        raise CoordinatesException(
            f"coordinates are not injective: {lattice.site_label(a)} and {lattice.site_label(b)} coincide")
    if validity.singular_sites:
        raise CoordinatesException(
            f"(l_h x^mu) is singular at {lattice.site_label(validity.singular_sites[0])}")
    if jacobian is None:
        jacobian = _jacobian(lattice, fields)
    logger.debug("%s coordinates on %s", kind.value, lattice.group.name)
    return CoordinateSystem(lattice, tuple(fields), jacobian, kind, kappa)
