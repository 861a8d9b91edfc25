from fractions import Fraction
from functools import lru_cache

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from cayley_geom.calculus import ScalarField, commutator, differential
from cayley_geom.connection import Connection
from cayley_geom.coordinates import (CoordinatesException, CoordinateKind, z4_coordinates, z4_identities,
                                     z4_partial_derivatives, commutation_check, coordinate_validity,
                                     coordinate_system, hypercubic_calculus, interior_mask, forward_difference_error,
                                     parse_spacing, christoffel, coordinate_curvature, coordinate_ricci,
                                     coordinate_curvature_scalar, agrees_with_sector_components, bianchi_hypercubic,
                                     transform_coordinates)
from cayley_geom.metric import MetricField
from cayley_geom.numeric import Backend
from cayley_geom.solver import TorsionMask, parameterize
from tests.resources.geometries import z3, torus, lattice_of, constant_metric, constant_connection, exact

R = sympy.Rational
ROTATION = ([[0, -1], [1, 0]], [[0, 1], [-1, 0]])
TWISTED = ([[1, 0], [0, 1]], [[0, -1], [1, 0]])


def torus3d():
    return lattice_of("torus:[3,3,3]", [[1, 0, 0], [0, 1, 0], [0, 0, 1]])


@lru_cache(maxsize=None)
def torsion_free_family(dimension):
    lattice = torus(3) if dimension == 2 else torus3d()
    return lattice, parameterize(lattice, TorsionMask.full())


def varying_diagonal(lattice):
    """V_1 = diag(eps, 1) with eps flipping sign along the second direction, V_2 = I."""
    group = lattice.group
    eps = [(-1) ** group.coordinates(g)[1] for g in range(lattice.sites)]
    v1 = [[[e, 0], [0, 1]] for e in eps]
    v2 = [[[1, 0], [0, 1]] for _ in eps]
    return Connection.per_site(lattice, [v1, v2]), eps


def fields_equal_on(mask, a, b):
    return all(Backend.EXACT.equal(a[g], b[g]) for g in range(len(mask)) if mask[g])


def test_z4_coordinate_values():
    system = z4_coordinates()
    assert system.kind == CoordinateKind.Z4
    assert [system.values(g) for g in range(4)] == [(1, 1), (-1, 1), (1, -1), (-1, -1)]
    assert system.site_of((-1, -1)) == 3
    with pytest.raises(CoordinatesException, match="no site has coordinates"):
        system.site_of((2, 2))


def test_z4_identities():
    identities = z4_identities(z4_coordinates())
    assert len(identities) == 11
    assert all(identities.values())


def test_z4_partial_derivatives_of_coordinates():
    system = z4_coordinates()
    x, y = system.fields
    one, zero = ScalarField.constant(system.lattice, 1), ScalarField.constant(system.lattice, 0)
    dx_x, dy_x = z4_partial_derivatives(system, x)
    assert dx_x.equals(one) and dy_x.equals(zero)
    dx_y, dy_y = z4_partial_derivatives(system, y)
    assert dx_y.equals(zero) and dy_y.equals(one)


@pytest.mark.parametrize("index", range(5))
def test_z4_partial_derivatives_expand_df(index):
    system = z4_coordinates()
    lattice = system.lattice
    x, y = system.fields
    f = x * y if index == 4 else ScalarField.indicator(lattice, index)
    closed = z4_partial_derivatives(system, f)
    generic = system.partial_derivatives(f)
    assert closed[0].equals(generic[0]) and closed[1].equals(generic[1])
    assert system.expand(closed).equals(differential(lattice, f))


def test_z4_commutation_relations():
    system = z4_coordinates()
    lattice = system.lattice
    x, y = system.fields
    dx, dy = system.differentials()
    assert commutator(lattice, dx, x).equals(dx.scaled(x * -2))
    assert commutator(lattice, dy, y).equals(dy.scaled(y * -2))
    assert commutator(lattice, dx, y).equals(dx.scaled((x - 1) * y))
    assert commutator(lattice, dy, x).equals(dx.scaled((x - 1) * y))
    report = commutation_check(system)
    assert report.holds()
    assert report.relation(1, 0).equals(commutator(lattice, dy, x))


def test_coordinate_validity():
    system = z4_coordinates()
    x, _ = system.fields
    validity = coordinate_validity(system.lattice, [x, x])
    assert validity.collisions == [(0, 2), (1, 3)]
    assert validity.singular_sites == [0, 1, 2, 3]
    assert not validity.valid
    assert coordinate_validity(system.lattice, list(system.fields)).valid
    with pytest.raises(CoordinatesException, match="need 2 coordinate functions"):
        coordinate_validity(system.lattice, [x])
    with pytest.raises(CoordinatesException, match="not injective"):
        coordinate_system(system.lattice, [x, x])


def test_hypercubic_coordinates():
    lattice = torus(3)
    system = hypercubic_calculus(lattice, "1/2")
    assert system.kappa == R(1, 2)
    assert system.values(lattice.group.element_at((2, 1))) == (1, R(1, 2))
    f = system.evaluate("x1**2")
    partial = system.partial_derivatives(f)[0]
    assert partial[lattice.group.element_at((1, 0))] == R(3, 2)
    mask = interior_mask(lattice)
    for mu, form in enumerate(system.differentials()):
        literal = differential(lattice, system.coordinate(mu)).coefficients
        assert fields_equal_on(mask, literal, form.coefficients)


def test_hypercubic_commutation_off_the_seam():
    lattice = torus(3)
    report = commutation_check(hypercubic_calculus(lattice, "1/2"))
    mask = interior_mask(lattice)
    assert not report.holds()
    assert report.holds(mask)
    assert report.deviating_sites() == [g for g in range(lattice.sites) if not mask[g]]


def test_interior_mask():
    lattice = torus(4)
    assert interior_mask(lattice).sum() == 9
    assert interior_mask(lattice, 2).sum() == 4
    assert interior_mask(lattice)[lattice.group.element_at((2, 2))]
    assert not interior_mask(lattice)[lattice.group.element_at((3, 0))]


@pytest.mark.parametrize("kappa", [1, R(1, 2), R(1, 4)])
def test_forward_difference_converges_at_first_order(kappa):
    lattice = torus(4)
    assert forward_difference_error(lattice, "x1**2 + x2", kappa) == kappa
    assert forward_difference_error(lattice, "x1**2 + x2", kappa, mu=1) == 0


def test_hypercubic_errors():
    with pytest.raises(CoordinatesException, match="hypercubic"):
        hypercubic_calculus(z3())
    with pytest.raises(CoordinatesException, match="must be positive"):
        parse_spacing("0")
    with pytest.raises(CoordinatesException, match="invalid lattice spacing"):
        parse_spacing("abc")
    with pytest.raises(CoordinatesException, match="symbols besides"):
        hypercubic_calculus(torus(3)).evaluate("x1 + z")


def test_identity_connection_has_no_christoffel_symbols():
    lattice = torus(3)
    c = Connection.identity(lattice)
    assert christoffel(c, Fraction(1, 3)).is_zero()
    assert Backend.EXACT.is_zero(coordinate_curvature(c))


def test_rotation_class_christoffel_symbols():
    lattice = torus(3)
    c = constant_connection(lattice, *ROTATION)
    field = christoffel(c)
    assert not field.is_zero()
    assert field.symbol(0, 0, 0)[0] == -1 and field.symbol(0, 0, 1)[0] == -1 and field.symbol(1, 0, 0)[0] == 1
    assert christoffel(c, "1/2").symbol(1, 0, 0)[0] == 2
    assert Backend.EXACT.is_zero(field.torsion())
    assert Backend.EXACT.is_zero(coordinate_curvature(c))
    assert agrees_with_sector_components(c, "1/2")


def test_twisted_connection_torsion():
    lattice = torus(3)
    c = constant_connection(lattice, *TWISTED)
    q = christoffel(c).torsion()
    assert all(list(q[g, :, 0, 1]) == [1, -1] for g in range(lattice.sites))
    assert all(list(q[g, :, 1, 0]) == [-1, 1] for g in range(lattice.sites))
    assert agrees_with_sector_components(c)
    assert not bianchi_hypercubic(c).torsion_free


def test_varying_diagonal_curvature():
    lattice = torus(4)
    c, eps = varying_diagonal(lattice)
    assert Backend.EXACT.is_zero(christoffel(c).torsion())
    r = coordinate_curvature(c)
    assert [r[g, 0, 0, 0, 1] for g in range(lattice.sites)] == [2 * e for e in eps]
    assert [r[g, 0, 0, 1, 0] for g in range(lattice.sites)] == [-2 * e for e in eps]
    ric = coordinate_ricci(r)
    assert [ric[g, 0, 1] for g in range(lattice.sites)] == [2 * e for e in eps]
    assert Backend.EXACT.is_zero(ric[:, 1, :]) and Backend.EXACT.is_zero(ric[:, 0, 0])
    assert coordinate_curvature_scalar(lattice, constant_metric(lattice), r).is_zero()
    assert agrees_with_sector_components(c)


def test_bianchi_with_isometries():
    lattice = torus(4)
    c, _ = varying_diagonal(lattice)
    report = bianchi_hypercubic(c, 1, constant_metric(lattice))
    assert report.torsion_free
    assert report.isometries_preserve_metric
    assert all(Backend.EXACT.equal(k, exact([[-1, 0], [0, 1]])) for k in report.isometries[(0, 1)])
    assert report.holds()
    rotation = bianchi_hypercubic(constant_connection(lattice, *ROTATION), 1, constant_metric(lattice))
    assert all(Backend.EXACT.equal(k, exact([[1, 0], [0, 1]])) for k in rotation.isometries[(1, 0)])


def test_bianchi_isometries_fail_for_stretched_metric():
    lattice = torus(4)
    c, _ = varying_diagonal(lattice)
    report = bianchi_hypercubic(c, 1, constant_metric(lattice, [[1, 1], [1, 2]]))
    assert not report.isometries_preserve_metric
    assert not report.holds()


def test_christoffel_needs_hypercubic_lattice():
    lattice = z3()
    with pytest.raises(CoordinatesException, match="hypercubic"):
        christoffel(Connection.identity(lattice))


def integer_connection(lattice):
    matrix = st.lists(st.lists(st.integers(-2, 2), min_size=2, max_size=2), min_size=2, max_size=2)
    return st.lists(st.lists(matrix, min_size=lattice.sites, max_size=lattice.sites), min_size=2, max_size=2)


@settings(max_examples=30, deadline=None)
@given(integer_connection(torus(3)), st.sampled_from([1, R(1, 2), R(2, 3)]))
def test_bianchi_identities_hold_for_any_connection(matrices, kappa):
    lattice = torus(3)
    report = bianchi_hypercubic(Connection.per_site(lattice, matrices), kappa)
    assert Backend.EXACT.is_zero(report.first)
    assert Backend.EXACT.is_zero(report.second)


@settings(max_examples=50, deadline=None)
@given(st.data())
def test_full_mask_connections_have_no_coordinate_torsion(data):
    _, family = torsion_free_family(2)
    values = data.draw(st.lists(st.fractions(min_value=-3, max_value=3, max_denominator=4),
                                min_size=family.free_count, max_size=family.free_count))
    c = family.substitute(dict(zip(family.symbols, values)))
    assert Backend.EXACT.is_zero(christoffel(c, "1/2").torsion())
    assert agrees_with_sector_components(c, "1/2")


@settings(max_examples=10, deadline=None)
@given(st.data())
def test_cyclic_curvature_vanishes_without_torsion(data):
    _, family = torsion_free_family(3)
    values = data.draw(st.lists(st.integers(-2, 2), min_size=family.free_count, max_size=family.free_count))
    c = family.substitute(dict(zip(family.symbols, values)))
    report = bianchi_hypercubic(c)
    assert report.torsion_free
    assert Backend.EXACT.is_zero(report.cyclic)
    assert report.holds()


def linear_transform(m=5):
    lattice = torus(m)
    return lattice, transform_coordinates(hypercubic_calculus(lattice), ["2*x1 + x2", "x2"])


def test_linear_transform_jacobian():
    lattice, transform = linear_transform()
    assert transform.target.kind == CoordinateKind.TRANSFORMED
    mask = interior_mask(lattice)
    a = exact([[2, 1], [0, 1]])
    assert all(Backend.EXACT.equal(transform.jacobian[g], a) for g in range(lattice.sites) if mask[g])
    corner = lattice.group.element_at((4, 4))
    assert Backend.EXACT.equal(transform.jacobian[corner], exact([[-8, -4], [0, -4]]))
    assert commutation_check(transform.target).holds()


def test_linear_transform_metric():
    lattice, transform = linear_transform()
    g_prime = transform.transform_metric(constant_metric(lattice))
    expected = exact([["1/4", "-1/4"], ["-1/4", "5/4"]])
    mask = interior_mask(lattice)
    assert all(Backend.EXACT.equal(g_prime[g], expected) for g in range(lattice.sites) if mask[g])


def test_linear_transform_of_flat_transport():
    lattice, transform = linear_transform()
    c = Connection.identity(lattice)
    transported = transform.transform_connection(c)
    mask = interior_mask(lattice, 2)
    half = exact([["1/2", 0], [0, "1/2"]])
    for mu in range(2):
        assert all(Backend.EXACT.equal(transported[mu, g], half) for g in range(lattice.sites) if mask[g])
    symbols = transform.christoffel(c).symbols
    assert all(Backend.EXACT.is_zero(symbols[g]) for g in range(lattice.sites) if mask[g])


def test_linear_transform_torsion_is_homogeneous():
    lattice, transform = linear_transform()
    c = constant_connection(lattice, [[1, 2], [0, -1]], [["1/2", 0], [3, 1]])
    direct = transform.christoffel(c).torsion()
    carried = transform.transform_tensor(christoffel(c).torsion(), upper=1)
    mask = interior_mask(lattice, 2)
    assert fields_equal_on(mask, direct, carried)


def test_transform_round_trips():
    lattice, transform = linear_transform()
    c, _ = varying_diagonal(lattice)
    twisted = Connection.per_site(lattice, [[[[1, g % 3], [0, 1]] for g in range(lattice.sites)],
                                            [[[2, 0], [1, 1]] for _ in range(lattice.sites)]])
    for connection in (c, twisted):
        assert transform.restore_connection(transform.transform_connection(connection)).equals(connection)
    m = MetricField.per_site(lattice, [[[1 + g, 1], [1, 2]] for g in range(lattice.sites)])
    assert Backend.EXACT.equal(transform.restore_metric(transform.transform_metric(m)),
                               transform.metric_components(m))
    r = coordinate_curvature(twisted)
    assert Backend.EXACT.equal(transform.transform_tensor(transform.transform_tensor(r, 1), 1, restore=True), r)


def test_transformed_partial_derivatives():
    lattice, transform = linear_transform()
    source, target = transform.source, transform.target
    f = source.evaluate("x1**2 * x2")
    via_jacobian = transform.partial_derivatives(f)
    direct = target.partial_derivatives(f)
    assert via_jacobian[0].equals(direct[0]) and via_jacobian[1].equals(direct[1])
    mask = interior_mask(lattice)
    for mu in range(2):
        partials = transform.partial_derivatives(source.coordinate(mu))
        for nu in range(2):
            assert fields_equal_on(mask, partials[nu].values, transform.inverse[:, mu, nu])


def test_nonlinear_transform_commutation():
    lattice = torus(4)
    transform = transform_coordinates(hypercubic_calculus(lattice), [lambda x1, x2: x1 + x2 * x2, "x2"])
    report = commutation_check(transform.target)
    assert report.holds()
    assert not Backend.EXACT.equal(report.structure[:, 0, 0], report.structure[:, 1, 1])


def test_transform_errors():
    with pytest.raises(CoordinatesException, match="hypercubic coordinates"):
        transform_coordinates(z4_coordinates(), ["x1", "x2"])
    with pytest.raises(CoordinatesException, match="not injective"):
        transform_coordinates(hypercubic_calculus(torus(3)), ["x1", "0"])
