import numpy as np

from cayley_geom.lattice import GroupLattice, PairKind
from cayley_geom.numeric import Backend
from .derivatives import differential
from .gauge import gauge_fix_array
from .one_form import OneForm
from .pullback import pullback_array
from .scalar_field import ScalarField
from .two_form import TwoFormRaw, TwoFormCanonical


def cap_product(lattice: GroupLattice, omega1: OneForm, omega2: OneForm) -> TwoFormRaw:
    """(sum f1^a theta^a) ∩ (sum f2^c theta^c) = sum f1^a f2^c theta^a ∩ theta^c"""
    return TwoFormRaw(lattice, omega1.coefficients[:, :, None] * omega2.coefficients[:, None, :])


def _delta_raw(lattice: GroupLattice, coefficients: np.ndarray) -> np.ndarray:
    raw = Backend.of(coefficients).zeros((lattice.sites, lattice.n, lattice.n))
    for a in range(lattice.n):
        for c in range(lattice.n):
            pair_class = lattice.cap_class(a, c)
            if pair_class.kind == PairKind.TRIANGLE:
                raw[:, a, c] = coefficients[:, pair_class.apex]
    return raw


def delta_map(lattice: GroupLattice, omega: OneForm) -> TwoFormCanonical:
    """Delta(theta^h) = sum over h''h' = h of theta^h' ∩ theta^h'', extended left-linearly."""
    return TwoFormCanonical(lattice, _delta_raw(lattice, omega.coefficients))


def differential_on_1form_raw(lattice: GroupLattice, omega: OneForm) -> TwoFormRaw:
    """sum_h theta^h ∩ R*_h omega + omega ∩ theta - Delta(omega), before gauge fixing."""
    f = omega.coefficients
    raw = _delta_raw(lattice, f) * -1
    for i in range(lattice.n):
        raw[:, i, :] = raw[:, i, :] + pullback_array(lattice, lattice.arrow(i), f)
    raw = raw + f[:, :, None]
    return TwoFormRaw(lattice, raw)


def differential_on_1form(lattice: GroupLattice, omega: OneForm) -> TwoFormCanonical:
    return TwoFormCanonical(lattice, gauge_fix_array(lattice, differential_on_1form_raw(lattice, omega).coefficients))


def differential_squared(lattice: GroupLattice, f: ScalarField) -> TwoFormCanonical:
    """d(df), which vanishes identically once gauge-fixed."""
    return differential_on_1form(lattice, differential(lattice, f))
