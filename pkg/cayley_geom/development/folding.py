from dataclasses import dataclass
from typing import List, Optional, Sequence

from cayley_geom.connection import Connection
from cayley_geom.lattice import GroupLattice
from cayley_geom.numeric import FLOAT_TOLERANCE
from .development import Development


@dataclass(frozen=True)
class OrientationFlag:
    """
    det_sign: sign of det V_h at the site
    dyad: for two arrows, whether the transported other arrow keeps its orientation,
    V^{h1}_{h,h'} + V^{h2}_{h,h'} > 0 for the arrow h' != h; None otherwise
    """
    site: int
    arrow: int
    det_sign: int
    dyad: Optional[bool]


@dataclass(frozen=True, eq=False)
class FoldingReport:
    flags: List[OrientationFlag]

    def folded_arrows(self, expected: Optional[Sequence[int]] = None) -> List[int]:
        """Arrows whose determinant sign differs from the expected one (+1 for every arrow by default)."""
        return sorted({f.arrow for f in self.flags
                       if f.det_sign != (1 if expected is None else expected[f.arrow])})

    def is_folded(self, expected: Optional[Sequence[int]] = None) -> bool:
        return bool(self.folded_arrows(expected))

    @property
    def dyad_violations(self) -> List[OrientationFlag]:
        return [f for f in self.flags if f.dyad is False]

    @property
    def orientation_preserving(self) -> bool:
        return not self.is_folded() and not self.dyad_violations


def folding_report(lattice: GroupLattice, c: Connection, development: Optional[Development] = None,
                   tolerance: float = FLOAT_TOLERANCE) -> FoldingReport:
    """Orientation flags on the sites reached by the development, or on every site."""
    backend = c.backend
    sites = development.sites() if development is not None else range(lattice.sites)
    flags = []
    for g in sites:
        for i in range(lattice.n):
            v = c.matrices[i, g]
            dyad = None
            if lattice.n == 2:
                dyad = bool(v[0, 1 - i] + v[1, 1 - i] > 0)
            flags.append(OrientationFlag(g, i, backend.sign(backend.det(v), tolerance), dyad))
    return FoldingReport(flags)
