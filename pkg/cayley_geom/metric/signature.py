from dataclasses import dataclass
from typing import Tuple

from .metric_exception import MetricException


@dataclass(frozen=True)
class Signature:
    """(n_plus, n_minus) at every site."""
    per_site: Tuple[Tuple[int, int], ...]

    @property
    def is_constant(self) -> bool:
        return len(set(self.per_site)) == 1

    @property
    def value(self) -> Tuple[int, int]:
        if not self.is_constant:
            raise MetricException("signature differs between sites")
        return self.per_site[0]

    @property
    def is_riemannian(self) -> bool:
        return self.is_constant and self.value[1] == 0
