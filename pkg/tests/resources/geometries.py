"""Lattices, metrics and connections shared by the test suites."""
from fractions import Fraction

import numpy as np

from cayley_geom.lattice import build_group, classify, GroupLattice
from cayley_geom.metric import MetricField
from cayley_geom.connection import Connection
from cayley_geom.numeric import Backend

TETRA = [[1, "1/2"], ["1/2", 1]]
IDENTITY2 = [[1, 0], [0, 1]]


def lattice_of(descriptor: str, arrows) -> GroupLattice:
    return classify(build_group(descriptor), arrows)


def z3() -> GroupLattice:
    return lattice_of("cyclic:3", [1, 2])


def z4_12() -> GroupLattice:
    return lattice_of("cyclic:4", [1, 2])


def z4_13() -> GroupLattice:
    return lattice_of("cyclic:4", [1, 3])


def z4_123() -> GroupLattice:
    return lattice_of("cyclic:4", [1, 2, 3])


def s3() -> GroupLattice:
    return lattice_of("symmetric:3", ["(12)", "(13)", "(23)"])


def torus(m: int = 4) -> GroupLattice:
    return lattice_of(f"torus:[{m},{m}]", [[1, 0], [0, 1]])


def constant_metric(lattice: GroupLattice, matrix=None) -> MetricField:
    if matrix is None:
        matrix = np.eye(lattice.n, dtype=int)
    return MetricField.constant(lattice, matrix)


def constant_connection(lattice: GroupLattice, *matrices) -> Connection:
    return Connection.constant(lattice, list(matrices))


def z3_spherical():
    lattice = z3()
    return lattice, constant_metric(lattice), constant_connection(lattice, [[0, -1], [1, 0]], [[0, 1], [-1, 0]])


def z3_maximal():
    lattice = z3()
    return lattice, constant_metric(lattice, TETRA), \
        constant_connection(lattice, [[-1, -1], [1, 0]], [[0, 1], [-1, -1]])


def z4_12_nofold():
    """Triangle torsion and curvature only, the (p, r) = (0, -2) solution."""
    lattice = z4_12()
    return lattice, constant_metric(lattice, TETRA), constant_connection(lattice, [[-1, 0], [1, 1]], [[-1, 0], [0, -1]])


def z4_12_biangle_torsion():
    lattice = z4_12()
    return lattice, constant_metric(lattice, TETRA), constant_connection(lattice, [[-1, 0], [1, 1]], [[1, 0], [0, 1]])


def z4_13_teleparallel():
    lattice = z4_13()
    return lattice, constant_metric(lattice, TETRA), \
        constant_connection(lattice, [[0, -1], [-1, 0]], [[0, -1], [-1, 0]])


def rational_orthogonal(t: Fraction, reflect: bool):
    """A rational point on O(2) from the stereographic parameter t."""
    cos = (1 - t * t) / (1 + t * t)
    sin = 2 * t / (1 + t * t)
    if reflect:
        return [[cos, sin], [sin, -cos]]
    return [[cos, -sin], [sin, cos]]


def exact(rows) -> np.ndarray:
    return Backend.EXACT.array(rows)
