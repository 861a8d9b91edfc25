import numpy as np

from cayley_geom.lattice import GroupLattice
from .two_form import TwoFormRaw, TwoFormCanonical


def gauge_fix_array(lattice: GroupLattice, raw: np.ndarray) -> np.ndarray:
    """
    Canonical quadrangle components of raw[g, a, c, ...]:
    |g| raw(a, c) - sum of raw over the caps of the same chain.
    Biangle and triangle caps are copied.
    """
    result = raw.copy()
    for g in lattice.chains:
        caps = lattice.sector_caps(g)
        total = sum(raw[:, a, c] for a, c in caps)
        for a, c in caps:
            result[:, a, c] = len(caps) * raw[:, a, c] - total
    return result


def gauge_fix(lattice: GroupLattice, raw: TwoFormRaw) -> TwoFormCanonical:
    return TwoFormCanonical(lattice, gauge_fix_array(lattice, raw.coefficients))


def gauge_shift(lattice: GroupLattice, raw: TwoFormRaw, g: int, psi: np.ndarray) -> TwoFormRaw:
    """Adds the pure-gauge term psi * sum over theta^h ∩ theta^h' with h'h = g."""
    coefficients = raw.coefficients.copy()
    for a, c in lattice.sector_caps(g):
        coefficients[:, a, c] = coefficients[:, a, c] + psi
    return TwoFormRaw(lattice, coefficients)
