from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from cayley_geom.connection import Connection, transport_matrix
from cayley_geom.lattice import GroupLattice, PairKind
from .curvature import shifted_columns
from .curvature_exception import CurvatureException


@dataclass(frozen=True, eq=False)
class BasicVectorField:
    """A basic vector field X = l_{s_X(g)} at every site g; s holds arrow positions."""
    lattice: GroupLattice
    s: np.ndarray

    def __post_init__(self):
        if self.s.shape != (self.lattice.sites,):
            raise CurvatureException(f"basic vector field needs {self.lattice.sites} arrows, got {self.s.shape}")
        if np.any(self.s < 0) or np.any(self.s >= self.lattice.n):
            raise CurvatureException("basic vector field must pick an arrow at every site")

    @classmethod
    def constant(cls, lattice: GroupLattice, h: int) -> 'BasicVectorField':
        return cls(lattice, np.full(lattice.sites, lattice.position(h), dtype=int))

    @classmethod
    def from_arrows(cls, lattice: GroupLattice, elements: Sequence[int]) -> 'BasicVectorField':
        return cls(lattice, np.array([lattice.position(h) for h in elements], dtype=int))

    @classmethod
    def from_function(cls, lattice: GroupLattice, function: Callable[[int], int]) -> 'BasicVectorField':
        return cls.from_arrows(lattice, [function(g) for g in range(lattice.sites)])


def _transported(lattice: GroupLattice, c: Connection, g: int, a: int, cap: int) -> np.ndarray:
    """V~_X R_X* Y at g for s_X = a, s_Y = cap."""
    return transport_matrix(lattice, c, g, [a])[:, lattice.ad_inverse(a, cap)]


def _composed(lattice: GroupLattice, c: Connection, g: int, a: int, cap: int) -> np.ndarray:
    """V~_X V~_{R_X* Y} at g."""
    return transport_matrix(lattice, c, g, [a, lattice.ad_inverse(a, cap)])


def _check(lattice: GroupLattice, *fields: BasicVectorField):
    if any(f.lattice is not lattice for f in fields):
        raise CurvatureException("vector fields live on a different lattice")


def torsion_on_fields(lattice: GroupLattice, c: Connection, x: BasicVectorField, y: BasicVectorField) -> np.ndarray:
    """
    Components [g, h] of Q(X, Y): X + V~_X R_X* Y on biangles, minus Z = l_{s_Y s_X} on triangles,
    and on quadrangles the sum of the differences against every pair of the chain.
    """
    _check(lattice, x, y)
    eye = c.backend.eye(lattice.n)
    result = c.backend.zeros((lattice.sites, lattice.n))
    for g in range(lattice.sites):
        a, cap = int(x.s[g]), int(y.s[g])
        pair = lattice.cap_class(a, cap)
        value = _transported(lattice, c, g, a, cap) + eye[a]
        if pair.kind == PairKind.BIANGLE:
            result[g] = value
        elif pair.kind == PairKind.TRIANGLE:
            result[g] = value - eye[pair.apex]
        else:
            result[g] = sum(value - _transported(lattice, c, g, a_hat, c_hat) - eye[a_hat]
                            for a_hat, c_hat in lattice.sector_caps(pair.product))
    return result


def torsion_difference_on_fields(lattice: GroupLattice, c: Connection, x: BasicVectorField, y: BasicVectorField,
                                 x_hat: BasicVectorField, y_hat: BasicVectorField) -> np.ndarray:
    """Q(X, Y; X^, Y^) = X + V~_X R_X* Y - X^ - V~_X^ R_X^* Y^ for quadrangles of the same chain."""
    _check(lattice, x, y, x_hat, y_hat)
    eye = c.backend.eye(lattice.n)
    result = c.backend.zeros((lattice.sites, lattice.n))
    for g in range(lattice.sites):
        first = lattice.cap_class(int(x.s[g]), int(y.s[g]))
        second = lattice.cap_class(int(x_hat.s[g]), int(y_hat.s[g]))
        if first.kind != PairKind.QUADRANGLE or first.product != second.product:
            raise CurvatureException(f"fields do not form a quadrangle at site {lattice.site_label(g)}")
        values = []
        for a, cap in ((int(x.s[g]), int(y.s[g])), (int(x_hat.s[g]), int(y_hat.s[g]))):
            values.append(_transported(lattice, c, g, a, cap) + eye[a])
        result[g] = values[0] - values[1]
    return result


def curvature_on_fields(lattice: GroupLattice, c: Connection, x: BasicVectorField, y: BasicVectorField,
                        z: BasicVectorField) -> np.ndarray:
    """
    Components [g, h] of R(X, Y)(Z), composing the backward transports V~_X V~_{R_X* Y}:
    minus Z on biangles, minus V~_W on triangles and against every pair of the chain on
    quadrangles, each applied to R_W* Z.
    """
    _check(lattice, x, y, z)
    eye = c.backend.eye(lattice.n)
    result = c.backend.zeros((lattice.sites, lattice.n))
    for g in range(lattice.sites):
        a, cap = int(x.s[g]), int(y.s[g])
        pair = lattice.cap_class(a, cap)
        column = shifted_columns(lattice, pair.product)[int(z.s[g])]
        value = _composed(lattice, c, g, a, cap)
        if pair.kind == PairKind.BIANGLE:
            result[g] = (value - eye)[:, column]
        elif pair.kind == PairKind.TRIANGLE:
            result[g] = (value - transport_matrix(lattice, c, g, [pair.apex]))[:, column]
        else:
            result[g] = sum((value - _composed(lattice, c, g, a_hat, c_hat))[:, column]
                            for a_hat, c_hat in lattice.sector_caps(pair.product))
    return result
