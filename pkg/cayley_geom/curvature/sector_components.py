from dataclasses import dataclass
from typing import Dict, Optional, Tuple

import numpy as np

from cayley_geom.calculus import gauge_fix_array
from cayley_geom.connection import Connection
from cayley_geom.lattice import GroupLattice, PairKind
from cayley_geom.numeric import Backend, FLOAT_TOLERANCE, max_abs
from .curvature_exception import CurvatureException

Cap = Tuple[int, int]


def transport_product(lattice: GroupLattice, c: Connection, i: int, j: int) -> np.ndarray:
    """V_{h_i}(g) V_{h_j}(g h_i) at every site."""
    shifted = c.matrices[j][lattice.shift(i)]
    return np.stack([c.matrices[i, g].dot(shifted[g]) for g in range(lattice.sites)])


@dataclass(frozen=True, eq=False)
class SectorComponents:
    """
    Components of a vector- or matrix-valued 2-form, indexed [g, a, c, ...] by the cap
    theta^a ∩ theta^c. raw holds one admissible choice of coefficients, canonical the
    gauge-fixed ones; the two differ only on quadrangle caps.
    """
    lattice: GroupLattice
    raw: np.ndarray
    canonical: np.ndarray

    @classmethod
    def from_raw(cls, lattice: GroupLattice, raw: np.ndarray):
        return cls(lattice, raw, gauge_fix_array(lattice, raw))

    @property
    def backend(self) -> Backend:
        return Backend.of(self.canonical)

    def component(self, a: int, c: int) -> np.ndarray:
        """Canonical component on the cap of arrow elements a, c."""
        lattice = self.lattice
        return self.canonical[:, lattice.position(a), lattice.position(c)]

    def sector(self, kind: PairKind) -> Dict[Cap, np.ndarray]:
        lattice = self.lattice
        return {(a, c): self.canonical[:, a, c] for a in range(lattice.n) for c in range(lattice.n)
                if lattice.cap_class(a, c).kind == kind}

    def difference(self, cap: Cap, cap_hat: Cap) -> np.ndarray:
        """Gauge-independent difference of two raw quadrangle coefficients of the same chain."""
        first, second = self.lattice.cap_class(*cap), self.lattice.cap_class(*cap_hat)
        if first.kind != PairKind.QUADRANGLE or first.product != second.product:
            raise CurvatureException(f"caps {cap} and {cap_hat} do not belong to the same quadrangle chain")
        return self.raw[:, cap[0], cap[1]] - self.raw[:, cap_hat[0], cap_hat[1]]

    def chain_sums(self) -> Dict[int, np.ndarray]:
        return {g: sum(self.canonical[:, a, c] for a, c in self.lattice.sector_caps(g))
                for g in self.lattice.chains}

    def is_zero(self, kind: Optional[PairKind] = None, tolerance: float = FLOAT_TOLERANCE) -> bool:
        if kind is None:
            return self.backend.is_zero(self.canonical, tolerance)
        return all(self.backend.is_zero(v, tolerance) for v in self.sector(kind).values())

    def max_abs(self) -> float:
        return max_abs(self.canonical)
