from dataclasses import dataclass
from enum import Enum
from typing import Optional

from .lattice_exception import LatticeException


class PairKind(Enum):
    """Sector of an ordered arrow pair (h1, h2) decided by the product h1 h2."""
    BIANGLE = "biangle"
    TRIANGLE = "triangle"
    QUADRANGLE = "quadrangle"

    @classmethod
    def parse_str(cls, name: str) -> 'PairKind':
        try:
            return cls(name.strip().lower())
        except ValueError:
            raise LatticeException(f"unknown sector '{name}'")


@dataclass(frozen=True)
class PairClass:
    """
    Classification of one ordered pair of arrow positions.
    product: group element h1 h2
    apex: arrow position of h0 = h1 h2 for triangles
    chain_position: position of the pair inside the chain of its product for quadrangles
    """
    kind: PairKind
    product: int
    apex: Optional[int] = None
    chain_position: Optional[int] = None
