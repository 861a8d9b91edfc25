from dataclasses import dataclass
from typing import List, Tuple

from cayley_geom.connection import Connection
from cayley_geom.lattice import GroupLattice, PairKind
from cayley_geom.metric import MetricField
from cayley_geom.numeric import FLOAT_TOLERANCE, common_backend


@dataclass(frozen=True)
class MetricLaw:
    """
    Reverse distance on a biangle (g_{h2,h2}(g h1) = g_{h1,h1}) or cosine law on a triangle
    (g_{h2,h2}(g h1) = g_{h1,h1} + g_{h0,h0} - 2 g_{h0,h1}) at one site, next to the torsion of the pair.
    """
    kind: PairKind
    pair: Tuple[int, int]
    site: int
    holds: bool
    torsion_zero: bool

    @property
    def consistent(self) -> bool:
        return self.holds or not self.torsion_zero


@dataclass(frozen=True, eq=False)
class MetricLawReport:
    laws: List[MetricLaw]

    @property
    def consistent(self) -> bool:
        return all(law.consistent for law in self.laws)

    def sector(self, kind: PairKind) -> List[MetricLaw]:
        return [law for law in self.laws if law.kind == kind]


def torsion_metric_identities(lattice: GroupLattice, m: MetricField, c: Connection,
                              tolerance: float = FLOAT_TOLERANCE) -> MetricLawReport:
    backend = common_backend(m.values, c.matrices)
    values, matrices = backend.convert(m.values), backend.convert(c.matrices)
    eye = backend.eye(lattice.n)
    laws = []
    for i in range(lattice.n):
        for j in range(lattice.n):
            pair = lattice.classify_pair(i, j)
            if pair.kind == PairKind.QUADRANGLE:
                continue
            for g in range(lattice.sites):
                moved = values[lattice.site_after(g, i), j, j]
                if pair.kind == PairKind.BIANGLE:
                    expected, column = values[g, i, i], -eye[i]
                else:
                    k = pair.apex
                    expected = values[g, i, i] + values[g, k, k] - 2 * values[g, k, i]
                    column = eye[k] - eye[i]
                laws.append(MetricLaw(pair.kind, (i, j), g,
                                      backend.is_zero_scalar(moved - expected, tolerance),
                                      backend.is_zero(matrices[i, g][:, j] - column, tolerance)))
    return MetricLawReport(laws)
