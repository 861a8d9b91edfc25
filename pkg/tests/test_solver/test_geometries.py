from fractions import Fraction

import pytest
from hypothesis import given, settings, assume, strategies as st

from cayley_geom.connection import Connection, is_compatible
from cayley_geom.curvature import curvature, torsion
from cayley_geom.lattice import PairKind
from cayley_geom.metric import MetricField
from cayley_geom.numeric import Backend
from cayley_geom.solver import (SolverException, lc_existence_inequality, quadrangle_closures, z4_step,
                                flat_family_functions, flat_family_z4, reflection_freedom, maximal_connection,
                                compatible_constant_metrics, torsion_metric_identities)
from tests.resources.geometries import (z3, z4_123, torus, constant_metric, constant_connection, exact,
                                        z3_maximal, z3_spherical, z4_12_biangle_torsion, TETRA)

ROTATION = ([[0, -1], [1, 0]], [[0, 1], [-1, 0]])


def torus_metric(lattice, special):
    """Identity metric with the given matrices at some sites."""
    identity = [[1, 0], [0, 1]]
    return MetricField.per_site(lattice, [special.get(g, identity) for g in range(lattice.sites)])


def corner(lattice):
    return lattice.group.mul(lattice.arrow(0), lattice.arrow(1))


def test_inequality_holds_on_flat_torus():
    lattice = torus()
    report = lc_existence_inequality(lattice, constant_metric(lattice))
    assert report.holds
    assert report.failures == []
    assert len(report.checks) == lattice.sites


def test_inequality_fails_on_stretched_site():
    lattice = torus()
    origin = lattice.group.identity
    stretched = lattice.site_after(origin, 0)
    report = lc_existence_inequality(lattice, torus_metric(lattice, {stretched: [[1, 0], [0, 100]]}))
    assert not report.holds
    assert report.failures == sorted([origin, stretched])


def test_inequality_tangent_case():
    lattice = torus()
    origin = lattice.group.identity
    m = torus_metric(lattice, {origin: [[2, 0], [0, 2]]})
    assert lc_existence_inequality(lattice, m).holds
    closures = quadrangle_closures(lattice, m, origin, corner(lattice))
    assert len(closures) == 1
    assert Backend.EXACT.equal(closures[0], exact(["-1/2", "1/2"]))


def test_closures_on_flat_torus():
    lattice = torus()
    closures = quadrangle_closures(lattice, constant_metric(lattice), lattice.group.identity, corner(lattice))
    assert [list(w) for w in closures] == [[0, 1], [-1, 0]]


def test_closures_and_inequality_errors():
    lattice = torus()
    with pytest.raises(SolverException, match="quadrangle .* has 1 pairs"):
        quadrangle_closures(lattice, constant_metric(lattice), 0, lattice.group.mul(lattice.arrow(0), lattice.arrow(0)))
    with pytest.raises(SolverException, match="need two arrows"):
        quadrangle_closures(z4_123(), constant_metric(z4_123()), 0, 2)
    lorentzian = constant_metric(lattice, [[1, 0], [0, -1]])
    with pytest.raises(SolverException, match="positive definite"):
        lc_existence_inequality(lattice, lorentzian)


def test_flat_family_example():
    m, c = flat_family_z4(0, 0, 1, 0, 1)
    assert m.equals(MetricField.per_site(m.lattice, [[[1, 0], [0, 1]], [[2, 1], [1, 1]],
                                                      [[1, 0], [0, 1]], [[2, 1], [1, 1]]]))
    assert Backend.EXACT.equal(c.matrices[0, 0], exact([[-1, 0], [1, 1]]))
    assert Backend.EXACT.equal(c.matrices[1, 0], exact([[1, 0], [0, -1]]))
    ps, qs = flat_family_functions(0, 0)
    assert ps == [0, 0, 0, 0] and qs == [0, -2, 0, -2]


@pytest.mark.parametrize("args, message", [
    ((-1, 1, 1, 0, 1), "1\\+p = 0"),
    ((1, -1, 1, 0, 1), "1\\+q = 0"),
    ((1, -2, 1, 0, 1), "1\\+p\\+q = 0"),
    ((0, 0, 1, 1, 1), "invertible metric"),
])
def test_flat_family_excluded(args, message):
    with pytest.raises(SolverException, match=message):
        flat_family_z4(*args)


@settings(max_examples=100, deadline=None)
@given(st.fractions(min_value=-3, max_value=3, max_denominator=5),
       st.fractions(min_value=-3, max_value=3, max_denominator=5),
       st.tuples(*[st.fractions(min_value=-3, max_value=3, max_denominator=3)] * 3))
def test_flat_family_is_levi_civita_and_flat(p, q, entries):
    a, b, c = entries
    assume(1 + p + q != 0 and 1 + p != 0 and 1 + q != 0)
    assume(a * c - b * b != 0)
    m, connection = flat_family_z4(p, q, a, b, c)
    lattice = m.lattice
    assert is_compatible(lattice, m, connection)
    assert torsion(lattice, connection).is_zero()
    assert curvature(lattice, connection).is_zero()


@settings(max_examples=100, deadline=None)
@given(st.fractions(min_value=-3, max_value=3, max_denominator=5),
       st.fractions(min_value=-3, max_value=3, max_denominator=5))
def test_z4_step_has_period_four(p, q):
    assume(1 + p + q != 0 and 1 + p != 0 and 1 + q != 0)
    ps, qs = flat_family_functions(p, q)
    for k in range(4):
        assert z4_step(ps[k], qs[k]) == (ps[(k + 1) % 4], qs[(k + 1) % 4])


def _analysis(result, site, i, j):
    return next(a for a in result if (a.site, a.i, a.j) == (site, i, j))


def test_reflection_of_a_diagonal_solution():
    lattice = torus(3)
    m = constant_metric(lattice)
    c1 = Connection.identity(lattice)
    c2 = constant_connection(lattice, [[-1, 0], [0, 1]], [[1, 0], [0, 1]])
    result = reflection_freedom(lattice, m, c1, c2)
    origin = lattice.group.identity
    a11 = _analysis(result, origin, 0, 0)
    assert list(a11.a) == [-2, 0]
    assert a11.reflection and a11.symmetric is None
    assert _analysis(result, origin, 0, 1).is_identity
    assert _analysis(result, origin, 0, 1).normal is None


def test_reflection_of_a_rotation_solution():
    lattice = torus(3)
    m = constant_metric(lattice)
    result = reflection_freedom(lattice, m, Connection.identity(lattice), constant_connection(lattice, *ROTATION))
    for analysis in result:
        assert analysis.reflection and analysis.orthogonal
        assert analysis.symmetric in (None, True)
    origin = lattice.group.identity
    assert list(_analysis(result, origin, 0, 1).a) == [-1, -1]
    assert list(_analysis(result, origin, 1, 0).a) == [-1, -1]
    assert list(_analysis(result, origin, 0, 0).a) == [-1, 1]
    assert list(_analysis(result, origin, 1, 1).a) == [1, -1]


def test_reflection_of_identical_connections():
    lattice = torus(3)
    c = constant_connection(lattice, *ROTATION)
    assert all(a.is_identity for a in reflection_freedom(lattice, constant_metric(lattice), c, c))


def test_reflection_needs_levi_civita_connections():
    lattice = torus(3)
    m = constant_metric(lattice)
    twisted = constant_connection(lattice, [[1, 0], [0, 1]], [[0, -1], [1, 0]])
    with pytest.raises(SolverException, match="torsion-free connections compatible"):
        reflection_freedom(lattice, m, Connection.identity(lattice), twisted)
    lattice, m, c = z3_maximal()
    with pytest.raises(SolverException, match="hypercubic"):
        reflection_freedom(lattice, m, c, c)


def test_constant_metrics_of_the_z4_maximal_connection():
    lattice = z4_123()
    c = maximal_connection(lattice)
    assert Backend.EXACT.equal(c.matrices[0, 0], exact([[-1, -1, -1], [1, 0, 0], [0, 1, 0]]))
    assert Backend.EXACT.equal(c.matrices[2, 0], exact([[0, 1, 0], [0, 0, 1], [-1, -1, -1]]))
    family = compatible_constant_metrics(lattice, c)
    assert family.dimension == 2
    assert family.contains([[2, 1, 1], [1, 2, 1], [1, 1, 2]])
    assert family.contains([[3, 1, 2], [1, 2, 1], [2, 1, 3]])
    assert not family.contains([[1, 1, 0], [1, 2, 1], [0, 1, 1]])
    assert not family.contains([[1, 0, 0], [0, 1, 0], [0, 0, 1]])
    member = family.member([1, Fraction(1, 2)])
    assert is_compatible(lattice, member, c)


def test_constant_metrics_of_the_z3_maximal_connection():
    lattice, _, c = z3_maximal()
    family = compatible_constant_metrics(lattice, c)
    assert family.dimension == 1
    assert family.contains(TETRA)
    with pytest.raises(SolverException, match="dimension 1"):
        family.member([1, 2])


def test_constant_metrics_errors():
    lattice = z3()
    with pytest.raises(SolverException, match="exact connection"):
        compatible_constant_metrics(lattice, Connection.identity(lattice, Backend.FLOAT))
    varying = Connection.per_site(lattice, [[[[1, 0], [0, 1]], [[1, 0], [0, 1]], [[0, 1], [1, 0]]],
                                            [[[1, 0], [0, 1]]] * 3])
    with pytest.raises(SolverException, match="constant connection"):
        compatible_constant_metrics(lattice, varying)


def test_metric_laws_on_the_maximal_geometry():
    report = torsion_metric_identities(*z3_maximal())
    assert report.consistent
    assert all(law.holds and law.torsion_zero for law in report.laws)


def test_metric_laws_on_the_spherical_geometry():
    report = torsion_metric_identities(*z3_spherical())
    assert report.consistent
    triangles = report.sector(PairKind.TRIANGLE)
    assert triangles and all(not law.holds and not law.torsion_zero for law in triangles)
    assert all(law.holds and law.torsion_zero for law in report.sector(PairKind.BIANGLE))


def test_biangle_law_without_vanishing_torsion():
    report = torsion_metric_identities(*z4_12_biangle_torsion())
    biangles = report.sector(PairKind.BIANGLE)
    assert biangles and all(law.holds and not law.torsion_zero for law in biangles)
    assert report.consistent
