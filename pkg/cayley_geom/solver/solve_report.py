from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from cayley_geom.connection import Connection, compatibility_residual
from cayley_geom.curvature import curvature, torsion
from cayley_geom.lattice import GroupLattice, PairKind
from cayley_geom.metric import MetricField
from cayley_geom.numeric import FLOAT_TOLERANCE, max_abs
from .torsion_mask import TorsionMask


@dataclass(frozen=True, eq=False)
class Solution:
    """
    One compatible connection.
    determinant_signs: sign of det V_h per arrow, 0 where it changes between sites
    """
    connection: Connection
    residual: float
    exact: bool
    flat: bool
    biangle_flat: bool
    torsion_free: bool
    determinant_signs: Tuple[int, ...]

    @property
    def folds(self) -> bool:
        return any(sign < 0 for sign in self.determinant_signs)


def determinant_signs(lattice: GroupLattice, c: Connection, tolerance: float = FLOAT_TOLERANCE) -> Tuple[int, ...]:
    backend = c.backend
    result = []
    for i in range(lattice.n):
        signs = {backend.sign(backend.det(c.matrices[i, g]), tolerance) for g in range(lattice.sites)}
        result.append(signs.pop() if len(signs) == 1 else 0)
    return tuple(result)


def classify_solution(lattice: GroupLattice, m: MetricField, c: Connection, exact: bool,
                      tolerance: float = FLOAT_TOLERANCE) -> Solution:
    cc = curvature(lattice, c)
    return Solution(connection=c,
                    residual=max_abs(compatibility_residual(lattice, m, c)),
                    exact=exact,
                    flat=cc.is_zero(tolerance=tolerance),
                    biangle_flat=cc.is_zero(PairKind.BIANGLE, tolerance),
                    torsion_free=torsion(lattice, c).is_zero(tolerance=tolerance),
                    determinant_signs=determinant_signs(lattice, c, tolerance))


@dataclass(frozen=True, eq=False)
class SolveReport:
    """
    Result of a connection search. site_solutions is filled for site-dependent searches, where
    connections holds the combinations of the per-site solutions (empty if there are too many).
    """
    lattice: GroupLattice
    mask: TorsionMask
    free_parameters: int
    method: str
    solutions: List[Solution] = field(default_factory=list)
    site_solutions: Optional[Dict[int, list]] = None
    truncated: bool = False

    @property
    def connections(self) -> List[Connection]:
        return [s.connection for s in self.solutions]

    @property
    def is_empty(self) -> bool:
        return not self.solutions and not any(self.site_solutions.values() if self.site_solutions else ())

    def __len__(self) -> int:
        return len(self.solutions)

    def flat(self) -> List[Solution]:
        return [s for s in self.solutions if s.flat]

    def biangle_flat(self) -> List[Solution]:
        return [s for s in self.solutions if s.biangle_flat]

    def with_determinant_signs(self, signs: Sequence[int]) -> List[Solution]:
        """Solutions whose transport determinants have the given sign pattern, e.g. a no-folding condition."""
        return [s for s in self.solutions if s.determinant_signs == tuple(signs)]

    def contains(self, c: Connection) -> bool:
        return any(s.connection.equals(c) for s in self.solutions)
