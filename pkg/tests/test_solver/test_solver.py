from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from cayley_geom.connection import Connection, is_compatible
from cayley_geom.curvature import torsion
from cayley_geom.lattice import PairKind
from cayley_geom.metric import MetricField
from cayley_geom.numeric import Backend
from cayley_geom.solver import (SolverException, TorsionMask, SolveConfig, parameterize, solve, grid_search,
                                newton_search, default_grid, parse_grid, resolve_threads, maximal_connection,
                                THREADS_VARIABLE)
from tests.resources.geometries import (z3, z4_12, z4_13, s3, torus, constant_metric, constant_connection, exact,
                                        z4_12_nofold, z4_12_biangle_torsion, z4_13_teleparallel, TETRA)

R = sympy.Rational
BIANGLE_TRIANGLE = TorsionMask(True, True, False)
TRIANGLE_QUADRANGLE = TorsionMask(False, True, True)
BIANGLE_QUADRANGLE = TorsionMask(True, False, True)
QUADRANGLE = TorsionMask(False, False, True)
BIANGLE = TorsionMask(True, False, False)


def tetra(lattice):
    return constant_metric(lattice, TETRA)


def family_metric(lattice):
    """A non-constant member of the metric family compatible with the unfolded Z4 connection."""
    return MetricField.per_site(lattice, [[[1, 0], [0, 1]], [[2, 1], [1, 1]], [[1, 0], [0, 1]], [[2, 1], [1, 1]]])


def matrices_of(c: Connection):
    return [c.matrices[i, 0] for i in range(c.lattice.n)]


def test_mask_parsing():
    assert TorsionMask.parse_str("biangle,triangle") == BIANGLE_TRIANGLE
    assert TorsionMask.parse_str(" Quadrangle ") == QUADRANGLE
    assert TorsionMask.parse_str("all") == TorsionMask.full()
    assert TorsionMask.parse_str("none") == TorsionMask.none()
    assert str(TRIANGLE_QUADRANGLE) == "triangle,quadrangle"
    with pytest.raises(SolverException, match="unknown torsion sector 'pentagon'"):
        TorsionMask.parse_str("biangle,pentagon")


def test_grid_parsing():
    grid = default_grid()
    assert len(grid) == 17
    assert grid[0] == -4 and grid[-1] == 4 and R(-7, 2) in grid
    assert parse_grid("default") == grid
    assert parse_grid("none") is None
    assert parse_grid("1/2, 0, 0") == (R(0), R(1, 2))
    with pytest.raises(SolverException, match="invalid grid"):
        parse_grid("1/0")


def test_thread_resolution():
    assert resolve_threads(None, {}) == 1
    assert resolve_threads(None, {THREADS_VARIABLE: "3"}) == 3
    assert resolve_threads(2, {THREADS_VARIABLE: "3"}) == 2
    with pytest.raises(SolverException, match="must be an integer"):
        resolve_threads(None, {THREADS_VARIABLE: "many"})
    with pytest.raises(SolverException, match="thread count must be positive"):
        resolve_threads(0, {})
    with pytest.raises(SolverException, match="thread count must be positive"):
        SolveConfig(threads=0)


def test_parameterize_z4_12_full():
    lattice = z4_12()
    p = parameterize(lattice, TorsionMask.full())
    assert p.free_count == 2
    a, b = p.symbols
    c = p.substitute({a: 3, b: 5})
    v1, v2 = matrices_of(c)
    assert Backend.EXACT.equal(v1, exact([[-1, 3], [1, 5]]))
    assert Backend.EXACT.equal(v2, exact([[4, 0], [4, -1]]))
    assert c.is_constant


def test_parameterize_z4_13_full():
    lattice = z4_13()
    p = parameterize(lattice, TorsionMask.full())
    assert p.free_count == 2
    u, w = p.symbols
    v1, v3 = matrices_of(p.substitute({u: 2, w: 7}))
    assert Backend.EXACT.equal(v1, exact([[2, -1], [7, 0]]))
    assert Backend.EXACT.equal(v3, exact([[0, 3], [-1, 6]]))


def test_parameterize_counts():
    assert parameterize(torus(3), TorsionMask.full()).free_count == 6
    assert parameterize(z3(), TorsionMask.full()).free_count == 0
    assert parameterize(z4_12(), BIANGLE_TRIANGLE).free_count == 4
    assert parameterize(z4_13(), QUADRANGLE).free_count == 6
    assert parameterize(z4_12(), TorsionMask.none()).free_count == 8
    per_site = parameterize(z4_12(), TorsionMask.full(), constant=False)
    assert per_site.free_count == 8
    assert len(per_site.site_symbols(2)) == 2
    with pytest.raises(KeyError):
        per_site.substitute({})


def test_maximal_connection():
    v1, v2 = matrices_of(maximal_connection(z3()))
    assert Backend.EXACT.equal(v1, exact([[-1, -1], [1, 0]]))
    assert Backend.EXACT.equal(v2, exact([[0, 1], [-1, -1]]))
    with pytest.raises(SolverException, match="not maximal"):
        maximal_connection(z4_12())


@settings(max_examples=200, deadline=None)
@given(st.lists(st.fractions(min_value=-5, max_value=5, max_denominator=7), min_size=12, max_size=12),
       st.sampled_from([TorsionMask.full(), BIANGLE_TRIANGLE, QUADRANGLE, BIANGLE]))
def test_masked_sectors_vanish_for_any_assignment(values, mask):
    lattice = s3() if mask == TorsionMask.full() else z4_12()
    p = parameterize(lattice, mask)
    c = p.substitute(dict(zip(p.symbols, values)))
    t = torsion(lattice, c)
    for kind in PairKind:
        if mask.masks(kind):
            assert t.is_zero(kind)


def test_grid_search_small_system():
    x, y = sympy.symbols("x y")
    roots = grid_search([x, y], [x * x - 1, x + y], default_grid())
    assert sorted(r.values for r in roots) == [(-1, 1), (1, -1)]
    assert all(r.exact for r in roots)
    assert grid_search([x], [x * x - 2], default_grid()) == []
    assert [r.values for r in grid_search([], [], default_grid())] == [()]


def test_z4_12_biangle_and_triangle_torsion_free():
    lattice = z4_12()
    report = solve(lattice, tetra(lattice), BIANGLE_TRIANGLE)
    assert len(report) == 4
    assert report.method == "grid"
    assert report.contains(z4_12_nofold()[2])
    assert len(report.biangle_flat()) == 4
    assert report.flat() == []
    for solution in report.solutions:
        assert solution.exact and solution.residual == 0
        v1, v2 = matrices_of(solution.connection)
        assert v1[0, 1] == v1[1, 1] - 1
        assert v1[0, 1] * (v1[0, 1] + 1) == 0
        assert v2[1, 0] == -1 - (v2[0, 0] - 1) / 2


def test_z4_12_biangle_torsion_allowed():
    lattice = z4_12()
    report = solve(lattice, tetra(lattice), TRIANGLE_QUADRANGLE)
    assert len(report) == 4
    assert report.contains(z4_12_biangle_torsion()[2])
    assert len(report.flat()) == 2
    product_rule = constant_connection(lattice, [[-1, -1], [1, 0]], [[0, 1], [-1, -1]])
    assert report.contains(product_rule)


@pytest.mark.parametrize("mask", [BIANGLE_QUADRANGLE, TorsionMask.full()])
def test_z4_12_no_compatible_connection(mask):
    lattice = z4_12()
    report = solve(lattice, tetra(lattice), mask)
    assert len(report) == 0
    assert report.is_empty


def test_z4_13_quadrangle_torsion_allowed():
    lattice = z4_13()
    report = solve(lattice, tetra(lattice), BIANGLE)
    assert len(report) == 4
    assert len(report.biangle_flat()) == 2
    assert [s.connection.equals(z4_13_teleparallel()[2]) for s in report.flat()] == [True]


def test_z4_13_biangle_torsion_allowed():
    lattice = z4_13()
    m = tetra(lattice)
    report = solve(lattice, m, QUADRANGLE)
    assert len(report) == 8
    assert len(report.biangle_flat()) == 3
    assert len(report.flat()) == 2
    for solution in report.solutions:
        assert is_compatible(lattice, m, solution.connection)
        assert torsion(lattice, solution.connection).is_zero(PairKind.QUADRANGLE)
    unfolded = [s for s in report.biangle_flat() if s.determinant_signs == (-1, -1)]
    swap = constant_connection(lattice, [[0, 1], [1, 0]], [[0, 1], [1, 0]])
    assert [s.connection.equals(swap) for s in unfolded] == [True]
    assert len(report.with_determinant_signs((-1, -1))) == 2


def test_torus_identity_metric_two_classes():
    lattice = torus(3)
    report = solve(lattice, constant_metric(lattice), TorsionMask.full())
    assert len(report) == 8
    diagonal = [s for s in report.solutions if matrices_of(s.connection)[0][0, 1] == 0]
    assert len(diagonal) == 4
    for solution in diagonal:
        v1, v2 = matrices_of(solution.connection)
        assert v1[1, 1] == 1 and v2[0, 0] == 1 and v1[1, 0] == 0 and v2[0, 1] == 0
    for solution in report.solutions:
        assert solution.torsion_free
    identity = Connection.identity(lattice)
    assert [s.flat for s in report.solutions if s.connection.equals(identity)] == [True]


def test_constant_connection_on_varying_metric():
    lattice = z4_12()
    report = solve(lattice, family_metric(lattice), BIANGLE_TRIANGLE)
    assert len(report) == 1
    assert report.solutions[0].connection.equals(z4_12_nofold()[2])


def test_site_dependent_connections():
    lattice = z4_12()
    report = solve(lattice, family_metric(lattice), BIANGLE_TRIANGLE, SolveConfig(constant_connection=False))
    assert [len(report.site_solutions[g]) for g in range(4)] == [4, 4, 4, 4]
    assert len(report) == 256
    assert report.contains(z4_12_nofold()[2])
    truncated = solve(lattice, family_metric(lattice), BIANGLE_TRIANGLE,
                      SolveConfig(constant_connection=False, max_connections=10))
    assert truncated.truncated and len(truncated) == 0 and not truncated.is_empty


def test_non_constant_signature_rejected():
    lattice = z4_12()
    m = MetricField.per_site(lattice, [[[1, 0], [0, 1]], [[1, 0], [0, -1]], [[1, 0], [0, 1]], [[1, 0], [0, 1]]])
    with pytest.raises(SolverException, match="signature is not constant"):
        solve(lattice, m, TorsionMask.full())


def test_newton_finds_exact_solutions():
    lattice = z4_12()
    m = tetra(lattice)
    grid_report = solve(lattice, m, BIANGLE_TRIANGLE)
    config = SolveConfig(grid=None, restarts=32, seed=7)
    report = solve(lattice, m, BIANGLE_TRIANGLE, config)
    assert report.method == "newton"
    assert 1 <= len(report) <= 4
    for solution in report.solutions:
        assert solution.exact
        assert grid_report.contains(solution.connection)
    parallel = solve(lattice, m, BIANGLE_TRIANGLE, SolveConfig(grid=None, restarts=32, seed=7, threads=3))
    assert [s.connection.equals(t.connection) for s, t in zip(report.solutions, parallel.solutions)] == \
        [True] * len(report)


def test_newton_search_rounds_to_rationals():
    x, y = sympy.symbols("x y")
    roots = newton_search([x, y], [x - y, x + y - 1], SolveConfig(grid=None, restarts=3, threads=2))
    assert {r.values for r in roots} == {(R(1, 2), R(1, 2))}
    assert all(r.exact for r in roots)
    assert [r.values for r in newton_search([], [], SolveConfig(grid=None))] == [()]


def test_newton_float_metric():
    lattice = z4_12()
    m = MetricField.constant(lattice, [[1.0, 0.5], [0.5, 1.0]], Backend.FLOAT)
    report = solve(lattice, m, BIANGLE_TRIANGLE, SolveConfig(grid=None, restarts=32, seed=3))
    for solution in report.solutions:
        assert not solution.exact
        assert solution.residual <= 1e-9


@settings(max_examples=20, deadline=None)
@given(st.fractions(min_value=Fraction(1, 4), max_value=4, max_denominator=4))
def test_solutions_scale_with_metric(scale):
    lattice = z4_13()
    base = solve(lattice, tetra(lattice), BIANGLE)
    scaled = solve(lattice, tetra(lattice).scaled(scale), BIANGLE)
    assert len(base) == len(scaled)
    assert all(scaled.contains(s.connection) for s in base.solutions)
