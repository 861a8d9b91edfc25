from cayley_geom.lattice import GroupLattice
from .one_form import OneForm
from .scalar_field import ScalarField


def ell_derivative(lattice: GroupLattice, h: int, f: ScalarField) -> ScalarField:
    """(l_h f)(g) = f(g h) - f(g)"""
    return ScalarField(lattice, f.values[lattice.group.right_translation(h)] - f.values)


def differential(lattice: GroupLattice, f: ScalarField) -> OneForm:
    """df = sum_h (l_h f) theta^h"""
    backend = f.backend
    coefficients = backend.zeros((lattice.sites, lattice.n))
    for i in range(lattice.n):
        coefficients[:, i] = f.values[lattice.shift(i)] - f.values
    return OneForm(lattice, coefficients)


def commutator(lattice: GroupLattice, omega: OneForm, f: ScalarField) -> OneForm:
    """[omega, f] = omega f - f omega = sum_h omega_h (l_h f) theta^h"""
    return OneForm(lattice, omega.coefficients * differential(lattice, f).coefficients)


def product_rule_residual(lattice: GroupLattice, f: ScalarField, g: ScalarField) -> OneForm:
    """d(fg) - (df) g - f dg, where (df) g moves g through theta^h as R*_h g."""
    df = differential(lattice, f).coefficients
    dg = differential(lattice, g).coefficients
    dfg = differential(lattice, f * g).coefficients
    right = df.copy()
    for i in range(lattice.n):
        right[:, i] = df[:, i] * g.values[lattice.shift(i)]
    return OneForm(lattice, dfg - right - f.values[:, None] * dg)
